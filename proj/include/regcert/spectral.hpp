#pragma once

#include <vector>

#include "regcert/exact.hpp"
#include "regcert/multigraph.hpp"

namespace regcert {

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int order() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double* row(int i) { return a_.data() + static_cast<std::size_t>(i) * n_; }
  const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }

  double frobenius_norm() const;
  /// Largest |a_ij - a_ji|.
  double asymmetry() const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

enum class SpectrumKind { adjacency, laplacian, quotient, generic };

/// Eigenvalues sorted in descending order.
struct Spectrum {
  std::vector<double> values;
  SpectrumKind kind = SpectrumKind::generic;

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  double trace() const;
};

struct EigenDecomposition {
  std::vector<double> values;   // descending
  std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i], unit norm
  int sweeps = 0;
};

struct JacobiOptions {
  /// Convergence when the off-diagonal Frobenius norm drops below
  /// tolerance * max(1, ||A||_F).
  double tolerance = 1e-12;
  int max_sweeps = 100;
  /// Inputs with max |a_ij - a_ji| above this are rejected.
  double symmetry_tolerance = 1e-12;
};

/// Cyclic Jacobi eigensolver for dense symmetric matrices.
EigenDecomposition eigen_symmetric(const DenseMatrix& m, const JacobiOptions& opts = {});
Spectrum eigenvalues_symmetric(const DenseMatrix& m, const JacobiOptions& opts = {});

DenseMatrix adjacency_matrix(const Multigraph& g);
DenseMatrix laplacian_matrix(const Multigraph& g);
Spectrum adjacency_spectrum(const Multigraph& g);
/// Laplacian eigenvalues, also descending: mu_2 is values[n-2].
Spectrum laplacian_spectrum(const Multigraph& g);

/// Second-largest adjacency eigenvalue (ties included).
double lambda2(const Multigraph& g);
/// Second-smallest Laplacian eigenvalue.
double mu2(const Multigraph& g);

/// Quotient matrix of a vertex partition: entry (i, j) is the number of
/// edges between blocks i and j divided by |V_i|, with twice the internal
/// edge count on the diagonal.
struct QuotientMatrix {
  RationalMatrix entries;
  std::vector<int> block_sizes;

  /// The similar symmetric matrix D^{1/2} Q D^{-1/2}, in floating point.
  DenseMatrix symmetrized() const;
  Spectrum spectrum() const;
  std::vector<Rational> row_sums() const;
};

QuotientMatrix quotient_matrix(const Multigraph& g, const Partition& p);

/// True iff inner (m values) interlaces outer (n > m values):
/// outer[i] >= inner[i] >= outer[n - m + i] for every i, within tol.
bool interlaces(const Spectrum& inner, const Spectrum& outer, double tol = 1e-8);

}  // namespace regcert
