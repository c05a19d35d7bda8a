#include "regcert/bounds.hpp"

#include <cmath>
#include <limits>

namespace regcert {
namespace {

struct RuleEntry {
  RuleId id;
  std::string_view name;
  RuleTraits traits;
};

constexpr RuleEntry kRuleTable[] = {
    {RuleId::fiedler, "fiedler", {Comparison::mu2_greater, Conclusion::vertex, true, false, true}},
    {RuleId::chandran, "chandran", {Comparison::lambda2_less, Conclusion::edge, false, true, true}},
    {RuleId::krivelevich_sudakov, "krivelevich_sudakov", {Comparison::lambda2_less_equal, Conclusion::edge, false, false, true}},
    {RuleId::cioaba_t, "cioaba_t", {Comparison::lambda2_less, Conclusion::edge, true, false, true}},
    {RuleId::cioaba_pi, "cioaba_pi", {Comparison::lambda2_less, Conclusion::edge, false, false, true}},
    {RuleId::cioaba_t2, "cioaba_t2", {Comparison::lambda2_less, Conclusion::edge, false, false, true}},
    {RuleId::o_mult_1, "o_mult_1", {Comparison::lambda2_less, Conclusion::edge, false, false, false}},
    {RuleId::o_mult_t, "o_mult_t", {Comparison::lambda2_less, Conclusion::edge, true, false, false}},
    {RuleId::o_vertex, "o_vertex", {Comparison::lambda2_less, Conclusion::vertex, false, false, false}},
    {RuleId::thm31, "thm31", {Comparison::lambda2_less, Conclusion::vertex, true, true, false}},
    {RuleId::thm32, "thm32", {Comparison::lambda2_less, Conclusion::vertex, false, true, false}},
    {RuleId::thm41, "thm41", {Comparison::lambda2_less, Conclusion::edge, true, true, false}},
    {RuleId::thm42_rho, "thm42_rho", {Comparison::lambda2_less, Conclusion::edge, false, true, false}},
};

const RuleEntry& entry(RuleId id) {
  for (const auto& e : kRuleTable)
    if (e.id == id) return e;
  throw BoundError("unknown rule id");
}

std::string fmt_params(const BoundRule& r) {
  return std::string(rule_name(r.id)) + "(d=" + std::to_string(r.d) + ", n=" + std::to_string(r.n) +
         ", t=" + std::to_string(r.t) + ")";
}

bool odd(int x) { return x % 2 != 0; }

}  // namespace

std::string_view rule_name(RuleId id) { return entry(id).name; }

std::optional<RuleId> parse_rule(std::string_view name) {
  for (const auto& e : kRuleTable)
    if (e.name == name) return e.id;
  return std::nullopt;
}

RuleTraits rule_traits(RuleId id) { return entry(id).traits; }

std::string_view comparison_symbol(Comparison c) {
  switch (c) {
    case Comparison::lambda2_less: return "lambda2 <";
    case Comparison::lambda2_less_equal: return "lambda2 <=";
    case Comparison::mu2_greater: return "mu2 >";
  }
  return "?";
}

int phi(int d, int t, GraphClass graph_class) {
  if (graph_class == GraphClass::multigraph) return t == 1 ? 3 : t + 1;
  return t == 1 ? d + 2 : d + 1;
}

int psi(int t) { return t == 1 ? 3 : 2; }

std::optional<std::string> rule_inapplicable(const BoundRule& r) {
  const auto& tr = entry(r.id).traits;
  const int d = r.d, n = r.n, t = r.t;
  if (tr.simple_only && r.graph_class != GraphClass::simple) return "stated for simple graphs only";
  if (tr.uses_t && (t < 0 || t > d - 1)) return "needs 0 <= t <= d-1";
  switch (r.id) {
    case RuleId::fiedler:
      if (t < 0) return "needs t >= 0";
      return std::nullopt;
    case RuleId::chandran:
      if (d < 1) return "needs d >= 1";
      if (n <= d) return "needs n > d";
      return std::nullopt;
    case RuleId::krivelevich_sudakov:
      if (d < 1) return "needs d >= 1";
      return std::nullopt;
    case RuleId::cioaba_t:
      return std::nullopt;
    case RuleId::cioaba_pi:
      if (d < 3 || !odd(d)) return "needs d odd and >= 3";
      return std::nullopt;
    case RuleId::cioaba_t2:
      if (d < 3) return "needs d >= 3";
      return std::nullopt;
    case RuleId::o_mult_1:
      if (d < 2) return "needs d >= 2";
      return std::nullopt;
    case RuleId::o_mult_t:
      if (t < 2) return "needs t >= 2";
      return std::nullopt;
    case RuleId::o_vertex:
      if (d < 2) return "needs d >= 2";
      return std::nullopt;
    case RuleId::thm31: {
      const int f = phi(d, t, r.graph_class);
      if (n <= f) return "needs n > phi(d,t) = " + std::to_string(f);
      return std::nullopt;
    }
    case RuleId::thm32:
      if (n < 5) return "needs n >= 5";
      if (d < 3) return "needs d >= 3";
      return std::nullopt;
    case RuleId::thm41: {
      const int p = psi(t);
      if (n <= p) return "needs n > psi(d,t) = " + std::to_string(p);
      return std::nullopt;
    }
    case RuleId::thm42_rho:
      if (d < 3 || !odd(d)) return "needs d odd and >= 3";
      if (n < 6 || odd(n)) return "needs n even and >= 6";
      return std::nullopt;
  }
  return "unknown rule";
}

double evaluate_bound(const BoundRule& r) {
  if (auto why = rule_inapplicable(r)) throw BoundError(fmt_params(r) + ": " + *why);
  const double d = r.d, n = r.n, t = r.t;
  switch (r.id) {
    case RuleId::fiedler: return t;
    case RuleId::chandran: return d - 1 - d / (n - d);
    case RuleId::krivelevich_sudakov: return d - 2;
    case RuleId::cioaba_t: return d - 2 * t / (d + 1);
    case RuleId::cioaba_pi: return pi_bound(r.d);
    case RuleId::cioaba_t2: return (d - 3 + std::sqrt((d + 3) * (d + 3) - 16)) / 2;
    case RuleId::o_mult_1: return (d - 1 + std::sqrt(9 * d * d - 10 * d + 17)) / 4;
    case RuleId::o_mult_t: return odd(r.t) ? d - t + 1 : d - t;
    case RuleId::o_vertex: return 3 * d / 4;
    case RuleId::thm31: {
      const double f = phi(r.d, r.t, r.graph_class);
      return d - t * d / (2 * f) - t * d / (2 * (n - f));
    }
    case RuleId::thm32: return (8 * n - 25) / (9 * n - 25) * d;
    case RuleId::thm41: {
      const double p = psi(r.t);
      return d - t / p - t / (n - p);
    }
    case RuleId::thm42_rho: return rho(r.d, r.n);
  }
  throw BoundError("unknown rule");
}

int rule_guarantee(const BoundRule& r) {
  switch (r.id) {
    case RuleId::chandran:
    case RuleId::krivelevich_sudakov: return r.d;
    case RuleId::cioaba_pi:
    case RuleId::o_mult_1:
    case RuleId::o_vertex:
    case RuleId::thm32:
    case RuleId::thm42_rho: return 2;
    case RuleId::cioaba_t2: return 3;
    default: return r.t + 1;
  }
}

Polynomial pi_polynomial(int d) {
  return Polynomial({make_rational(-2), make_rational(-(3LL * d - 2)), make_rational(-(d - 3LL)), make_rational(1)});
}

double pi_bound(int d) {
  if (d < 3 || !odd(d)) throw BoundError("pi(d) needs d odd and >= 3");
  const auto [lo, hi] = pi_polynomial(d).largest_root(make_rational(1, 1LL << 40));
  return to_double((lo + hi) / 2);
}

RationalMatrix rho_matrix(int d, int n) {
  if (d < 1 || n == 4) throw BoundError("rho_matrix needs d >= 1 and n != 4");
  const Rational a = make_rational(d - 1, n - 4);
  return RationalMatrix{{make_rational(d + 1, 2), make_rational(d - 1, 2), 0, 0},
                        {d - 1, 0, 1, 0},
                        {0, 1, 0, d - 1},
                        {0, 0, a, Rational(d) - a}};
}

RationalMatrix rho_prime_matrix(int d, int n) {
  if (d < 1 || n == 6) throw BoundError("rho_prime_matrix needs d >= 1 and n != 6");
  const Rational a = make_rational(d - 1, n - 6);
  const Rational b = make_rational(d - 1, 4);
  return RationalMatrix{{Rational(d) - b, b, 0, 0}, {d - 1, 0, 1, 0}, {0, 1, 0, d - 1}, {0, 0, a, Rational(d) - a}};
}

namespace {

Polynomial deflated_charpoly(const RationalMatrix& m, int d) {
  const auto [q, r] = characteristic_polynomial(m).divmod(Polynomial({Rational(-d), Rational(1)}));
  if (!r.is_zero()) throw BoundError("matrix does not have eigenvalue d");
  return q;
}

void require_rho_domain(int d, int n, int min_n) {
  if (d < 3 || !odd(d)) throw BoundError("rho needs d odd and >= 3, got d=" + std::to_string(d));
  if (n < min_n || odd(n))
    throw BoundError("rho needs n even and >= " + std::to_string(min_n) + ", got n=" + std::to_string(n));
}

const Rational& rho_width() {
  static const Rational w = make_rational(1, 1LL << 42);
  return w;
}

}  // namespace

std::pair<Rational, Rational> second_eigenvalue_bracket(const RationalMatrix& m, int d, const Rational& width) {
  return deflated_charpoly(m, d).largest_root(width);
}

double rho(int d, int n) {
  require_rho_domain(d, n, 6);
  const auto [lo, hi] = second_eigenvalue_bracket(rho_matrix(d, n), d, rho_width());
  return to_double((lo + hi) / 2);
}

double rho_prime(int d, int n) {
  require_rho_domain(d, n, 10);
  const auto [lo, hi] = second_eigenvalue_bracket(rho_prime_matrix(d, n), d, rho_width());
  return to_double((lo + hi) / 2);
}

bool rho_exceeds(int d, int n, const Rational& x) {
  require_rho_domain(d, n, 6);
  const auto p = deflated_charpoly(rho_matrix(d, n), d);
  // rho is the largest root of p, so rho > x iff p has a root in (x, inf).
  return p.count_roots(x, p.root_bound()) > 0;
}

namespace {

void require_thm32(int d, int n, int s1) {
  if (d < 3 || n < 5) throw BoundError("needs d >= 3 and n >= 5");
  if (s1 < 2 || s1 > n - 3) throw BoundError("needs 2 <= s1 <= n-3, got s1=" + std::to_string(s1));
}

}  // namespace

double thm32_quotient_lambda2(int d, int n, int s1, double m2) {
  require_thm32(d, n, s1);
  if (!(m2 > 0 && m2 < d)) throw BoundError("needs 0 < m2 < d");
  const double s2 = n - 1 - s1;
  const double m1 = d - m2;
  const double b = d - m1 / s1 - m2 / s2;
  const double c = m1 * m1 / s1 + m2 * m2 / s2 - m1 * m2 / (s1 * s2);
  return 0.5 * (b + std::sqrt(b * b + 4 * c));
}

double thm32_optimal_m2(int d, int n, int s1) {
  require_thm32(d, n, s1);
  const double s2 = n - 1 - s1;
  return d * (s2 + 2 * s1 * s2) / (n - 1 + 4 * s1 * s2);
}

double thm32_optimal_value(int d, int n, int s1) {
  require_thm32(d, n, s1);
  const double s2 = n - 1 - s1;
  return d - static_cast<double>(d) * n / (n - 1 + 4 * s1 * s2);
}

std::pair<int, double> thm32_minimize_s1(int d, int n) {
  require_thm32(d, n, 2);
  int best_s1 = 2;
  double best = thm32_optimal_value(d, n, 2);
  for (int s1 = 3; s1 <= n - 3; ++s1) {
    const double v = thm32_optimal_value(d, n, s1);
    if (v < best) {
      best = v;
      best_s1 = s1;
    }
  }
  return {best_s1, best};
}

Rational case3_quotient_lambda2_exact(int d, int s1, int s2) {
  if (s1 < 1 || s2 < 1) throw BoundError("case3 needs s1, s2 >= 1");
  return Rational(d) - make_rational(1, s1 + 1) - make_rational(1, s2 + 1);
}

double case3_quotient_lambda2(int d, int s1, int s2) { return to_double(case3_quotient_lambda2_exact(d, s1, s2)); }

namespace {

constexpr std::pair<CaseId, std::string_view> kCaseNames[] = {
    {CaseId::c2a, "c2a"}, {CaseId::c2b, "c2b"}, {CaseId::c2c, "c2c"},
    {CaseId::c2d, "c2d"}, {CaseId::c3a, "c3a"}, {CaseId::c3b, "c3b"},
};

void require_case_domain(CaseId id, int d, int n) {
  auto fail = [&](const std::string& why) {
    throw BoundError(std::string(case_name(id)) + " at d=" + std::to_string(d) + ", n=" + std::to_string(n) + ": " + why);
  };
  switch (id) {
    case CaseId::c2a:
      if (d != 3) fail("needs d = 3");
      break;
    case CaseId::c2b:
      if (d != 5) fail("needs d = 5");
      break;
    case CaseId::c2c:
      if (d != 7) fail("needs d = 7");
      break;
    case CaseId::c2d:
    case CaseId::c3a:
    case CaseId::c3b:
      if (d < 3) fail("needs d >= 3");
      break;
  }
  const int min_n = (id == CaseId::c3a || id == CaseId::c3b) ? 14 : 10;
  if (n < min_n) fail("needs n >= " + std::to_string(min_n));
}

}  // namespace

std::string_view case_name(CaseId id) {
  for (const auto& [c, name] : kCaseNames)
    if (c == id) return name;
  return "?";
}

std::optional<CaseId> parse_case(std::string_view name) {
  for (const auto& [c, s] : kCaseNames)
    if (s == name) return c;
  return std::nullopt;
}

Rational case_point(CaseId id, int d, int n) {
  require_case_domain(id, d, n);
  switch (id) {
    case CaseId::c2a: return make_rational(1689, 600);
    case CaseId::c2b: return make_rational(47, 10);
    case CaseId::c2c: return make_rational(333, 50);
    case CaseId::c2d: return Rational(d) - make_rational(1, 5) - make_rational(1, n - 5);
    case CaseId::c3a: return Rational(d) - make_rational(1, 3) - make_rational(1, n - 3);
    case CaseId::c3b: return Rational(d) - make_rational(1, 7) - make_rational(1, n - 7);
  }
  throw BoundError("unknown case");
}

CaseResult check_case(CaseId id, int d, int n) {
  CaseResult r;
  r.x = case_point(id, d, n);
  const int sq = charpoly_sign(rho_matrix(d, n), r.x);
  switch (id) {
    case CaseId::c2a:
    case CaseId::c2b:
    case CaseId::c2c:
    case CaseId::c2d:
      r.q_prime_positive = charpoly_sign(rho_prime_matrix(d, n), r.x) > 0;
      r.q_condition = sq < 0;
      r.holds = *r.q_prime_positive && r.q_condition;
      break;
    case CaseId::c3a:
      r.q_condition = sq > 0;
      r.holds = r.q_condition;
      break;
    case CaseId::c3b:
      r.q_condition = sq < 0;
      r.holds = r.q_condition;
      break;
  }
  return r;
}

}  // namespace regcert
