#pragma once

// Exact rational linear algebra: matrices over Q, fraction-free
// determinants, characteristic polynomials and real-root isolation by
// Sturm sequences. Backed by GMP's mpq_class.

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace regcert {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Reduced fraction num/den; throws GraphError on den == 0.
Rational make_rational(long long num, long long den = 1);
int sign(const Rational& r);
double to_double(const Rational& r);
std::string to_string(const Rational& r);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n);  // zero matrix
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  int order() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  static RationalMatrix identity(int n);
  /// x*I - *this
  RationalMatrix shifted(const Rational& x) const;
  Rational trace() const;
  RationalMatrix operator*(const RationalMatrix& o) const;

  bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// Exact determinant. Rows are scaled to integers by positive factors and
/// reduced with Bareiss' fraction-free elimination.
Rational determinant(const RationalMatrix& m);

/// Sign of det(x*I - q) in {-1, 0, +1}, computed exactly.
int charpoly_sign(const RationalMatrix& q, const Rational& x);

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }
  bool is_zero() const { return c_.empty(); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  Polynomial derivative() const;
  /// Quotient and remainder of division by a non-zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator-() const;

  /// Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  /// Bound B with every real root in (-B, B).
  Rational root_bound() const;

  /// Bracket [lo, hi] of width <= width around the largest real root.
  /// Throws GraphError if the polynomial has no real root.
  std::pair<Rational, Rational> largest_root(const Rational& width) const;

 private:
  void trim();
  std::vector<Polynomial> sturm_chain() const;
  std::vector<Rational> c_;
};

/// det(x*I - m) via the Faddeev-LeVerrier recurrence in exact arithmetic.
Polynomial characteristic_polynomial(const RationalMatrix& m);

}  // namespace regcert
