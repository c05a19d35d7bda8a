#include "regcert/exact.hpp"

#include <algorithm>

#include "regcert/multigraph.hpp"

namespace regcert {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw GraphError("rational with zero denominator");
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

int sign(const Rational& r) { return sgn(r); }
double to_double(const Rational& r) { return r.get_d(); }
std::string to_string(const Rational& r) { return r.get_str(); }

RationalMatrix::RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(static_cast<int>(rows.size())) {
  a_.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw GraphError("rational matrix must be square");
    for (const auto& x : r) a_.push_back(x);
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::shifted(const Rational& x) const {
  RationalMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = -(*this)(i, j);
  for (int i = 0; i < n_; ++i) m(i, i) += x;
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (n_ != o.n_) throw GraphError("matrix order mismatch");
  RationalMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

Rational determinant(const RationalMatrix& m) {
  const int n = m.order();
  if (n == 0) return 1;
  // Scale row i by the lcm of its denominators (a positive integer).
  std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
  BigInt scale = 1;
  for (int i = 0; i < n; ++i) {
    BigInt l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (int j = 0; j < n; ++j) {
      const Rational& x = m(i, j);
      a[static_cast<std::size_t>(i) * n + j] = x.get_num() * (l / x.get_den());
    }
  }
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
  int swaps = 0;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      ++swaps;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1), scale);
  det.canonicalize();
  return swaps % 2 ? Rational(-det) : det;
}

int charpoly_sign(const RationalMatrix& q, const Rational& x) { return sgn(determinant(q.shifted(x))); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double Polynomial::operator()(double x) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw GraphError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + dd)] / divisor.leading();
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<Polynomial> Polynomial::sturm_chain() const {
  std::vector<Polynomial> chain{*this, derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int Polynomial::count_roots(const Rational& a, const Rational& b) const {
  if (is_zero()) throw GraphError("count_roots on the zero polynomial");
  const auto chain = sturm_chain();
  auto variations = [&](const Rational& x) {
    int v = 0, last = 0;
    for (const auto& p : chain) {
      const int s = sgn(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  // With square-free handling implied by the chain ending at gcd(p, p'),
  // V(a) - V(b) counts distinct roots in (a, b].
  return variations(a) - variations(b);
}

Rational Polynomial::root_bound() const {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    Rational r = abs(c_[i] / leading());
    if (r > m) m = r;
  }
  return m + 1;
}

std::pair<Rational, Rational> Polynomial::largest_root(const Rational& width) const {
  if (degree() < 1) throw GraphError("largest_root needs a non-constant polynomial");
  Rational hi = root_bound();
  Rational lo = -hi;
  if (count_roots(lo, hi) == 0) throw GraphError("polynomial has no real root");
  // Invariant: a root lies in (lo, hi] and none lies in (hi, +inf).
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (count_roots(mid, hi) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

Polynomial characteristic_polynomial(const RationalMatrix& a) {
  const int n = a.order();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[static_cast<std::size_t>(n)] = 1;
  RationalMatrix m(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    RationalMatrix next = a * m;
    for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    m = std::move(next);
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / k;
  }
  return Polynomial(std::move(c));
}

}  // namespace regcert
