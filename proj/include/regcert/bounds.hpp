#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regcert/exact.hpp"
#include "regcert/multigraph.hpp"

namespace regcert {

/// Raised when a rule or case is evaluated outside its stated parameter range.
class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RuleId {
  fiedler,
  chandran,
  krivelevich_sudakov,
  cioaba_t,
  cioaba_pi,
  cioaba_t2,
  o_mult_1,
  o_mult_t,
  o_vertex,
  thm31,
  thm32,
  thm41,
  thm42_rho,
};

inline constexpr std::array<RuleId, 13> kAllRules{
    RuleId::fiedler,  RuleId::chandran, RuleId::krivelevich_sudakov, RuleId::cioaba_t, RuleId::cioaba_pi,
    RuleId::cioaba_t2, RuleId::o_mult_1, RuleId::o_mult_t,           RuleId::o_vertex, RuleId::thm31,
    RuleId::thm32,    RuleId::thm41,    RuleId::thm42_rho};

std::string_view rule_name(RuleId id);
std::optional<RuleId> parse_rule(std::string_view name);

enum class GraphClass { simple, multigraph };

/// How the spectral quantity is compared with the threshold.
enum class Comparison {
  lambda2_less,        // lambda2 < tau
  lambda2_less_equal,  // lambda2 <= tau
  mu2_greater,         // mu2 > tau
};

/// Which connectivity the rule guarantees.
enum class Conclusion { vertex, edge };

struct RuleTraits {
  Comparison comparison;
  Conclusion conclusion;
  bool uses_t;
  bool uses_n;
  /// Graph classes the rule is stated for.
  bool simple_only;
};

RuleTraits rule_traits(RuleId id);
std::string_view comparison_symbol(Comparison c);

struct BoundRule {
  RuleId id = RuleId::thm42_rho;
  int d = 3;
  int n = 0;
  int t = 1;
  GraphClass graph_class = GraphClass::multigraph;
};

/// Threshold tau of a rule. Throws BoundError naming the violated predicate.
/// For fiedler, tau = t (mu2 > t gives kappa >= t+1).
double evaluate_bound(const BoundRule& rule);

/// Connectivity the rule guarantees when it fires: t+1, 2, 3 or d.
int rule_guarantee(const BoundRule& rule);

/// Empty when the parameters are in range, else the violated predicate.
std::optional<std::string> rule_inapplicable(const BoundRule& rule);

int phi(int d, int t, GraphClass graph_class);
int psi(int t);

/// Largest root of x^3 - (d-3)x^2 - (3d-2)x - 2, to 1e-10 or better.
double pi_bound(int d);
Polynomial pi_polynomial(int d);

/// The 4x4 quotient matrices used for the cut-edge bound.
/// rho_matrix needs n != 4, rho_prime_matrix n != 6; d >= 1.
RationalMatrix rho_matrix(int d, int n);
RationalMatrix rho_prime_matrix(int d, int n);

/// Largest root of charpoly(m) / (x - d): the second eigenvalue of a matrix
/// whose Perron root is d. Returns an exact bracket of width <= `width`.
std::pair<Rational, Rational> second_eigenvalue_bracket(const RationalMatrix& m, int d,
                                                        const Rational& width);

/// Requires d odd >= 3, n even >= 6.
double rho(int d, int n);
/// Requires d odd >= 3, n even >= 10.
double rho_prime(int d, int n);
/// Exact test of rho(d, n) > x (same preconditions as rho).
bool rho_exceeds(int d, int n, const Rational& x);

/// lambda2 of the 3x3 cut-vertex quotient matrix, closed form.
/// Requires d >= 3, n >= 5, 2 <= s1 <= n-3, 0 < m2 < d.
double thm32_quotient_lambda2(int d, int n, int s1, double m2);
/// Stationary point of the closed form in m2; a minimizer.
double thm32_optimal_m2(int d, int n, int s1);
/// d - dn / (n - 1 + 4 s1 s2), the value at the stationary point.
double thm32_optimal_value(int d, int n, int s1);
/// Minimum of thm32_optimal_value over s1 in [2, n-3]; ties go to the
/// smallest s1.
std::pair<int, double> thm32_minimize_s1(int d, int n);

/// d - 1/(s1+1) - 1/(s2+1). Requires s1, s2 >= 1.
double case3_quotient_lambda2(int d, int s1, int s2);
Rational case3_quotient_lambda2_exact(int d, int s1, int s2);

enum class CaseId { c2a, c2b, c2c, c2d, c3a, c3b };
inline constexpr std::array<CaseId, 6> kAllCases{CaseId::c2a, CaseId::c2b, CaseId::c2c,
                                                  CaseId::c2d, CaseId::c3a, CaseId::c3b};
std::string_view case_name(CaseId id);
std::optional<CaseId> parse_case(std::string_view name);

struct CaseResult {
  Rational x;
  /// det(xI - Q') > 0; only for the c2 cases.
  std::optional<bool> q_prime_positive;
  /// det(xI - Q) < 0 for c2*, c3b; det(xI - Q) > 0 for c3a.
  bool q_condition = false;
  /// All conditions of the case hold.
  bool holds = false;
};

/// Case domains: c2a d=3, c2b d=5, c2c d=7, c2d d>=3, all with n>=10;
/// c3a and c3b need d>=3, n>=14. Parity is not restricted.
CaseResult check_case(CaseId id, int d, int n);
Rational case_point(CaseId id, int d, int n);

// ---- certificates ----

struct RuleOutcome {
  RuleId id = RuleId::fiedler;
  int t = 0;  // 0 where the rule has no t
  GraphClass graph_class = GraphClass::multigraph;
  double threshold = 0;
  Comparison comparison = Comparison::lambda2_less;
  Conclusion conclusion = Conclusion::edge;
  int guarantee = 0;
  bool fired = false;
  /// |value - threshold| <= tolerance.
  bool tight = false;
  /// Fired guarantee does not exceed the exact connectivity.
  bool holds = true;
  std::string note;
};

struct SkippedRule {
  RuleId id;
  int t = 0;
  std::string reason;
};

struct CertifyOptions {
  /// Evaluate only this t; by default every t in [1, d-1].
  std::optional<int> t;
  double tolerance = 1e-9;
};

struct Certificate {
  int n = 0;
  std::optional<int> d;
  bool simple = false;
  bool connected = false;
  double lambda2 = 0;
  double mu2 = 0;
  int kappa = 0;
  int kappa_prime = 0;
  std::vector<RuleOutcome> outcomes;
  std::vector<SkippedRule> skipped;

  bool sound() const;
  std::vector<RuleOutcome> fired() const;
  /// Best fired guarantee for each conclusion; 0 when none fired.
  int best_kappa_guarantee() const;
  int best_kappa_prime_guarantee() const;
};

/// Needs n >= 2. Non-regular input gets only the Fiedler rule.
Certificate certify(const Multigraph& g, const CertifyOptions& opts = {});

}  // namespace regcert
