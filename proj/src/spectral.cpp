#include "regcert/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

#include "regcert/kernels.hpp"

namespace regcert {
namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  const int n = a.order();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double* r = a.row(i);
    s += simd::sum_squares(std::span<const double>(r, static_cast<std::size_t>(i)));
    s += simd::sum_squares(std::span<const double>(r + i + 1, static_cast<std::size_t>(n - i - 1)));
  }
  return std::sqrt(s);
}

}  // namespace

double DenseMatrix::frobenius_norm() const { return std::sqrt(simd::sum_squares(a_)); }

double DenseMatrix::asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

double Spectrum::trace() const { return std::accumulate(values.begin(), values.end(), 0.0); }

EigenDecomposition eigen_symmetric(const DenseMatrix& m, const JacobiOptions& opts) {
  const int n = m.order();
  if (n < 1) throw GraphError("eigen_symmetric: empty matrix");
  if (m.asymmetry() > opts.symmetry_tolerance)
    throw GraphError("eigen_symmetric: matrix is not symmetric (max deviation " +
                     std::to_string(m.asymmetry()) + ")");

  DenseMatrix a = m;
  // Symmetrize exactly so the row-then-mirror update below stays consistent.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(j, i) = a(i, j) = 0.5 * (m(i, j) + m(j, i));

  // vt holds the eigenvectors as rows, so rotations touch contiguous memory.
  DenseMatrix vt(n);
  for (int i = 0; i < n; ++i) vt(i, i) = 1.0;

  const double threshold = opts.tolerance * std::max(1.0, a.frobenius_norm());
  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (sweep == opts.max_sweeps)
      throw std::runtime_error("eigen_symmetric: no convergence after " + std::to_string(sweep) +
                               " Jacobi sweeps");
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        simd::rotate_rows(std::span<double>(a.row(p), static_cast<std::size_t>(n)),
                          std::span<double>(a.row(q), static_cast<std::size_t>(n)), c, s);
        // Rows p and q now hold the rotated off-block entries; mirror them
        // into columns p and q and fix the 2x2 block directly.
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(k, p) = a(p, k);
          a(k, q) = a(q, k);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        simd::rotate_rows(std::span<double>(vt.row(p), static_cast<std::size_t>(n)),
                          std::span<double>(vt.row(q), static_cast<std::size_t>(n)), c, s);
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });
  EigenDecomposition out;
  out.sweeps = sweep;
  for (int i : order) {
    out.values.push_back(a(i, i));
    out.vectors.emplace_back(vt.row(i), vt.row(i) + n);
  }
  return out;
}

Spectrum eigenvalues_symmetric(const DenseMatrix& m, const JacobiOptions& opts) {
  Spectrum s;
  s.values = eigen_symmetric(m, opts).values;
  return s;
}

DenseMatrix adjacency_matrix(const Multigraph& g) {
  DenseMatrix a(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) a(u, v) = g.mult(u, v);
  return a;
}

DenseMatrix laplacian_matrix(const Multigraph& g) {
  DenseMatrix l(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) l(u, v) = -g.mult(u, v);
    l(u, u) = g.degree(u);
  }
  return l;
}

Spectrum adjacency_spectrum(const Multigraph& g) {
  Spectrum s = eigenvalues_symmetric(adjacency_matrix(g));
  s.kind = SpectrumKind::adjacency;
  return s;
}

Spectrum laplacian_spectrum(const Multigraph& g) {
  Spectrum s = eigenvalues_symmetric(laplacian_matrix(g));
  s.kind = SpectrumKind::laplacian;
  return s;
}

double lambda2(const Multigraph& g) {
  if (g.order() < 2) throw GraphError("lambda2 needs at least two vertices");
  return adjacency_spectrum(g)[1];
}

double mu2(const Multigraph& g) {
  if (g.order() < 2) throw GraphError("mu2 needs at least two vertices");
  const auto s = laplacian_spectrum(g);
  return s[s.size() - 2];
}

DenseMatrix QuotientMatrix::symmetrized() const {
  const int s = entries.order();
  DenseMatrix b(s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      // |V_i| Q_ij = [V_i, V_j] is symmetric; divide by sqrt(|V_i||V_j|).
      const Rational e = entries(i, j) * block_sizes[static_cast<std::size_t>(i)];
      b(i, j) = e.get_d() / std::sqrt(static_cast<double>(block_sizes[static_cast<std::size_t>(i)]) *
                                      block_sizes[static_cast<std::size_t>(j)]);
    }
  return b;
}

Spectrum QuotientMatrix::spectrum() const {
  Spectrum s = eigenvalues_symmetric(symmetrized());
  s.kind = SpectrumKind::quotient;
  return s;
}

std::vector<Rational> QuotientMatrix::row_sums() const {
  std::vector<Rational> r(static_cast<std::size_t>(entries.order()), Rational(0));
  for (int i = 0; i < entries.order(); ++i)
    for (int j = 0; j < entries.order(); ++j) r[static_cast<std::size_t>(i)] += entries(i, j);
  return r;
}

QuotientMatrix quotient_matrix(const Multigraph& g, const Partition& p) {
  if (p.order() != g.order()) throw GraphError("quotient_matrix: partition is for a different vertex count");
  const int s = p.size();
  std::vector<long long> between(static_cast<std::size_t>(s) * s, 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      between[static_cast<std::size_t>(p.block_of(u)) * s + p.block_of(v)] += g.mult(u, v);
  // Ordered-pair sums count cross edges once per direction and internal
  // edges twice, which is exactly [V_i, V_j] off the diagonal and
  // 2|E(G[V_i])| on it.
  QuotientMatrix q{RationalMatrix(s), {}};
  for (int i = 0; i < s; ++i) {
    const int size = static_cast<int>(p.block(i).size());
    q.block_sizes.push_back(size);
    for (int j = 0; j < s; ++j) q.entries(i, j) = make_rational(between[static_cast<std::size_t>(i) * s + j], size);
  }
  return q;
}

bool interlaces(const Spectrum& inner, const Spectrum& outer, double tol) {
  const int m = inner.size();
  const int n = outer.size();
  if (m >= n) throw GraphError("interlaces: inner sequence must be shorter than outer");
  for (int i = 0; i < m; ++i) {
    if (inner[i] > outer[i] + tol) return false;
    if (inner[i] < outer[n - m + i] - tol) return false;
  }
  return true;
}

}  // namespace regcert
