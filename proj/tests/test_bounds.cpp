#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "regcert/bounds.hpp"
#include "regcert/generators.hpp"
#include "regcert/spectral.hpp"

using namespace regcert;
using oracle::mg;

namespace {

double tau(RuleId id, int d, int n = 0, int t = 1, GraphClass c = GraphClass::multigraph) {
  return evaluate_bound({id, d, n, t, c});
}

const RuleOutcome* find(const Certificate& c, RuleId id, int t = 0) {
  for (const auto& o : c.outcomes)
    if (o.id == id && (t == 0 || o.t == t)) return &o;
  return nullptr;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("rule names round-trip") {
    for (RuleId id : kAllRules) CHECK(parse_rule(rule_name(id)) == id);
    CHECK(rule_name(RuleId::thm42_rho) == "thm42_rho");
    CHECK_FALSE(parse_rule("nope"));
    for (CaseId id : kAllCases) CHECK(parse_case(case_name(id)) == id);
  }

  TEST_CASE("evaluate_bound examples") {
    CHECK(tau(RuleId::thm31, 3, 5, 1) == doctest::Approx(7.0 / 4.0).epsilon(1e-12));
    for (int n = 5; n <= 12; ++n)
      CHECK(tau(RuleId::thm31, 3, n, 1) == doctest::Approx((5.0 * n - 18) / (6.0 * n - 18) * 3).epsilon(1e-12));
    const double pi3 = tau(RuleId::cioaba_pi, 3, 0, 1, GraphClass::simple);
    CHECK(pi3 == doctest::Approx(2.7785).epsilon(1e-4));
    CHECK(std::abs(pi3 - (3 - 2.0 / 8)) < 0.05);
    CHECK(std::abs(tau(RuleId::o_mult_1, 3) - (2 + std::sqrt(68.0)) / 4) <= 1e-12);
    CHECK(std::abs(tau(RuleId::o_mult_1, 3) - rho(3, 6)) <= 1e-9);
    CHECK(tau(RuleId::thm32, 4, 5) == doctest::Approx(3.0).epsilon(1e-12));
  }

  TEST_CASE("literature thresholds follow their formulas") {
    const auto S = GraphClass::simple;
    CHECK(tau(RuleId::fiedler, 5, 0, 2, S) == 2);
    CHECK(tau(RuleId::chandran, 4, 10, 1, S) == doctest::Approx(3 - 4.0 / 6));
    CHECK(tau(RuleId::krivelevich_sudakov, 5, 0, 1, S) == 3);
    CHECK(tau(RuleId::cioaba_t, 5, 0, 2, S) == doctest::Approx(5 - 4.0 / 6));
    CHECK(tau(RuleId::cioaba_t2, 5, 0, 1, S) == doctest::Approx((2 + std::sqrt(48.0)) / 2));
    CHECK(tau(RuleId::o_mult_t, 6, 0, 2) == 4);
    CHECK(tau(RuleId::o_vertex, 8) == 6);
    CHECK(tau(RuleId::thm41, 5, 12, 2) == doctest::Approx(5 - 2.0 / psi(2) - 2.0 / (12 - psi(2))));
    CHECK(rule_guarantee({RuleId::krivelevich_sudakov, 5, 0, 1, S}) == 5);
    CHECK(rule_guarantee({RuleId::thm31, 5, 12, 2, GraphClass::multigraph}) == 3);
  }

  TEST_CASE("inapplicable parameters are rejected with the predicate") {
    CHECK_THROWS_AS(tau(RuleId::thm32, 2, 5), BoundError);
    CHECK_THROWS_AS(tau(RuleId::thm32, 3, 4), BoundError);
    CHECK_THROWS_AS(tau(RuleId::cioaba_pi, 4, 0, 1, GraphClass::simple), BoundError);
    CHECK_THROWS_AS(tau(RuleId::thm31, 3, 5, 3), BoundError);
    CHECK_THROWS_AS(tau(RuleId::thm42_rho, 3, 7), BoundError);
    CHECK_THROWS_AS(tau(RuleId::chandran, 3, 10), BoundError);  // simple graphs only
    const auto why = rule_inapplicable({RuleId::thm42_rho, 4, 8, 1, GraphClass::multigraph});
    REQUIRE(why);
    CHECK(why->find("odd") != std::string::npos);
  }

  TEST_CASE("pi(d) is the largest root of its cubic") {
    for (int d = 3; d <= 21; d += 2) {
      const double x = pi_bound(d);
      const auto p = pi_polynomial(d);
      CHECK(std::abs(x * x * x - (d - 3) * x * x - (3 * d - 2) * x - 2) <= 1e-9);
      CHECK(p(x - 1e-7) < 0);
      CHECK(p(x + 1e-7) > 0);
      CHECK(p.count_roots(make_rational(static_cast<long>(std::floor(x * 1e6)), 1000000) + make_rational(1, 1000000),
                          p.root_bound()) == 0);
    }
  }

  TEST_CASE("rho examples") {
    CHECK(std::abs(rho(3, 6) - 2.5615528128) <= 1e-9);
    for (int d = 3; d <= 21; d += 2) {
      CHECK(std::abs(rho(d, 6) - (d - 1 + std::sqrt(9.0 * d * d - 10.0 * d + 17)) / 4) <= 1e-9);
      for (int n = 6; n <= 30; n += 2) {
        const double x = d - 1.0 / 3 - 1.0 / (n - 3);
        CHECK(rho(d, n) > x);
        CHECK(rho_exceeds(d, n, make_rational(3 * d - 1, 3) - make_rational(1, n - 3)));
        CHECK(characteristic_polynomial(rho_matrix(d, n))(Rational(d)) == 0);
        if (n > 6) CHECK(rho(d, n) > rho(d, n - 2));
      }
    }
    CHECK_THROWS_AS(rho(4, 6), BoundError);
    CHECK_THROWS_AS(rho(3, 4), BoundError);
    CHECK_THROWS_AS(rho_prime(3, 8), BoundError);
    CHECK(rho_prime(3, 10) > 0);
  }

  TEST_CASE("rho equals the eigensolver on the quotient matrix") {
    // rho_matrix is the quotient of blocks of sizes 2, 1, 1, n-4.
    for (int d = 3; d <= 11; d += 2)
      for (int n = 6; n <= 20; n += 2) {
        const auto s = QuotientMatrix{rho_matrix(d, n), {2, 1, 1, n - 4}}.spectrum();
        CHECK(std::abs(s[0] - d) <= 1e-9);
        CHECK(std::abs(s[1] - rho(d, n)) <= 1e-9);
        const auto [lo, hi] = second_eigenvalue_bracket(rho_matrix(d, n), d, make_rational(1, 1 << 30));
        CHECK(lo.get_d() <= rho(d, n) + 1e-12);
        CHECK(hi.get_d() >= rho(d, n) - 1e-12);
      }
  }

  TEST_CASE("m2 optimum: closed form against a numeric sweep") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 30; ++k) {
      const int d = 3 + static_cast<int>(rng() % 10), n = 5 + static_cast<int>(rng() % 30);
      const int s1 = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 4));
      const double m2 = thm32_optimal_m2(d, n, s1);
      const double v = thm32_optimal_value(d, n, s1);
      CHECK(std::abs(thm32_quotient_lambda2(d, n, s1, m2) - v) <= 1e-9);
      double best = 1e300;
      for (int i = 1; i < 10000; ++i) best = std::min(best, thm32_quotient_lambda2(d, n, s1, d * i / 10000.0));
      CHECK(std::abs(best - v) <= 1e-6);
      CHECK(best >= v - 1e-12);
    }
  }

  TEST_CASE("s1 minimum lands at 2 with the cut-vertex bound value") {
    for (int d = 3; d <= 12; ++d)
      for (int n = 5; n <= 40; ++n) {
        const auto [s1, v] = thm32_minimize_s1(d, n);
        CHECK(s1 == 2);
        CHECK(std::abs(v - (8.0 * n - 25) * d / (9.0 * n - 25)) <= 1e-8);
      }
    CHECK_THROWS(thm32_quotient_lambda2(3, 5, 1, 1.0));
    CHECK_THROWS(thm32_quotient_lambda2(3, 5, 2, 0.0));
  }

  TEST_CASE("case3_quotient_lambda2") {
    CHECK(case3_quotient_lambda2_exact(3, 6, 6) == make_rational(19, 7));
    CHECK(case3_quotient_lambda2(3, 6, 6) == doctest::Approx(19.0 / 7));
    for (int s1 = 1; s1 < 20; ++s1)
      for (int s2 = 1; s2 < 20; ++s2) {
        CHECK(case3_quotient_lambda2(5, s1 + 1, s2) > case3_quotient_lambda2(5, s1, s2));
        CHECK(case3_quotient_lambda2(5, s1, s2 + 1) > case3_quotient_lambda2(5, s1, s2));
        if (s1 >= 6 && s2 >= 6) {
          const int n = s1 + s2 + 2;
          CHECK(case3_quotient_lambda2_exact(5, s1, s2) >= Rational(5) - make_rational(1, 7) - make_rational(1, n - 7));
        }
      }
  }

  TEST_CASE("check_case examples") {
    for (int n = 10; n <= 30; ++n) {
      const auto r = check_case(CaseId::c2a, 3, n);
      CHECK(r.x == make_rational(1689, 600));
      CHECK(*r.q_prime_positive == (n >= 13));
      CHECK(r.q_condition);
    }
    for (int n : {10, 12}) CHECK(check_case(CaseId::c2b, 5, n).holds);
    for (int n = 14; n <= 40; ++n) {
      CHECK(check_case(CaseId::c3b, 3, n).q_condition == (n >= 19));
      CHECK(check_case(CaseId::c3b, 4, n).q_condition);
    }
    CHECK(check_case(CaseId::c2d, 9, 20).x == Rational(9) - make_rational(1, 5) - make_rational(1, 15));
    CHECK(check_case(CaseId::c3a, 5, 20).x == Rational(5) - make_rational(1, 3) - make_rational(1, 17));
    CHECK_THROWS_AS(check_case(CaseId::c2a, 5, 10), BoundError);
    CHECK_THROWS_AS(check_case(CaseId::c3a, 3, 13), BoundError);
  }

  TEST_CASE("certify: K4") {
    const auto c = certify(complete_graph(4));
    const auto* ks = find(c, RuleId::krivelevich_sudakov);
    REQUIRE(ks);
    CHECK(ks->fired);
    CHECK(ks->guarantee == 3);
    CHECK(c.kappa_prime == 3);
    CHECK(c.best_kappa_prime_guarantee() == 3);
    CHECK(c.sound());
    bool fiedler_skipped = false;
    for (const auto& s : c.skipped) fiedler_skipped |= s.id == RuleId::fiedler;
    CHECK(fiedler_skipped);
  }

  TEST_CASE("certify: extremal_6vertex(3) is tight for thm42_rho") {
    const auto c = certify(extremal_6vertex(3));
    const auto* r = find(c, RuleId::thm42_rho);
    REQUIRE(r);
    CHECK_FALSE(r->fired);
    CHECK(r->tight);
    CHECK(c.kappa_prime == 1);
    CHECK(c.sound());
  }

  TEST_CASE("certify: disconnected input fires nothing") {
    const auto c = certify(disjoint_union(complete_graph(4), complete_graph(4)));
    CHECK(c.fired().empty());
    CHECK(c.kappa == 0);
    CHECK(c.sound());
  }

  TEST_CASE("certify: 5-regular simple graph with lambda2 <= 3") {
    bool found = false;
    for (std::uint64_t s = 0; s < 200 && !found; ++s) {
      const auto g = random_regular_multigraph(12, 5, 1, s, 100000);
      if (!g.is_connected() || lambda2(g) > 3) continue;
      found = true;
      const auto c = certify(g);
      const auto* ks = find(c, RuleId::krivelevich_sudakov);
      REQUIRE(ks);
      CHECK(ks->fired);
      CHECK(c.best_kappa_prime_guarantee() == 5);
      CHECK(c.kappa_prime == 5);
    }
    CHECK(found);
  }

  TEST_CASE("certify: non-regular input gets only Fiedler") {
    const auto c = certify(path_graph(5));
    REQUIRE(c.outcomes.size() == 1);
    CHECK(c.outcomes[0].id == RuleId::fiedler);
    CHECK(c.outcomes[0].guarantee <= c.kappa);
    CHECK(c.skipped.size() == kAllRules.size() - 1);
  }

  TEST_CASE("certify: duplicated complete graph exclusion is flagged") {
    const auto c = certify(mg("mg 2\n0 3\n3 0"));
    int flagged = 0;
    for (const auto& s : c.skipped) flagged += s.reason.find("duplicated complete graph") != std::string::npos;
    CHECK(flagged > 0);
    CHECK(c.sound());
  }

  TEST_CASE("certify: t option restricts evaluation") {
    CertifyOptions o;
    o.t = 2;
    for (const auto& r : certify(petersen_graph(), o).outcomes)
      if (r.id != RuleId::fiedler && rule_traits(r.id).uses_t) CHECK(r.t == 2);
  }

  TEST_CASE("certificates are sound on random regular multigraphs") {
    for (std::uint64_t s = 0; s < 400; ++s) {
      const int n = 4 + static_cast<int>(s % 11), d = 3 + static_cast<int>(s % 6);
      if (n * d % 2) continue;
      const auto g = random_regular_multigraph(n, d, 1 + static_cast<int>(s % 3) + (d > 4), s, 200000);
      const auto c = certify(g);
      CHECK(c.sound());
      for (const auto& o : c.fired())
        CHECK(o.guarantee <= (o.conclusion == Conclusion::vertex ? c.kappa : c.kappa_prime));
    }
  }
}
