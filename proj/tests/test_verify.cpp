#include "doctest.h"
#include "regcert/verify.hpp"

using namespace regcert;

TEST_SUITE("verify") {
  TEST_CASE("soundness parameters stay in range and are feasible") {
    for (std::uint64_t s = 0; s < 5000; ++s) {
      const auto p = soundness_params(s);
      CHECK(p.d >= 3);
      CHECK(p.d <= 8);
      CHECK(p.n >= 4);
      CHECK(p.n <= 16);
      CHECK(p.n * p.d % 2 == 0);
      CHECK(p.d <= (p.n - 1) * p.max_mult);
    }
  }

  TEST_CASE("randomized suites pass on short runs") {
    for (const auto& r : {run_thm_soundness(300, 0), run_interlacing(300, 1), run_oracle_equivalence(100, 2)}) {
      CAPTURE(r.suite);
      CAPTURE(r.first_failure);
      CHECK(r.passed());
      CHECK(r.checks > 0);
    }
  }

  TEST_CASE("case-checks on a reduced grid") {
    const auto r = run_case_checks(12, 60);
    CAPTURE(r.first_failure);
    CHECK(r.passed());
  }

  TEST_CASE("reference regions") {
    CHECK_FALSE(reference_case_region(CaseId::c2a, 0, 3, 12));
    CHECK(reference_case_region(CaseId::c2a, 0, 3, 13));
    CHECK(reference_case_region(CaseId::c2b, 1, 5, 17));
    CHECK_FALSE(reference_case_region(CaseId::c2b, 1, 5, 18));
    CHECK_FALSE(reference_case_region(CaseId::c3b, 1, 3, 18));
    CHECK(reference_case_region(CaseId::c3b, 1, 4, 14));
  }

  TEST_CASE("failures keep the first counterexample") {
    SuiteResult r;
    r.fail("one", Multigraph(2));
    r.fail("two");
    CHECK(r.failures == 2);
    CHECK(r.first_failure == "one");
    CHECK(r.counterexample.has_value());
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 5);
    CHECK(suite_is_randomized("thm-soundness"));
    CHECK_FALSE(suite_is_randomized("case-checks"));
    CHECK(golden_A_count(18, true) == 8326u);
    CHECK_FALSE(golden_A_count(20, false));
  }
}
