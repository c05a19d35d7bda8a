#pragma once

// Property and replication suites behind `regcert verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regcert/bounds.hpp"
#include "regcert/multigraph.hpp"

namespace regcert {

struct SuiteResult {
  std::string suite;
  long checks = 0;
  long failures = 0;
  std::string first_failure;
  std::optional<Multigraph> counterexample;
  /// Informational lines (counts, margins).
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }
  void fail(std::string what, std::optional<Multigraph> g = std::nullopt);
};

struct SoundnessParams {
  int n;
  int d;
  int max_mult;
};

/// Parameters of trial `seed` in the soundness sweep: d in [3, 8],
/// n in [4, 16] with n*d even, multiplicity caps cycling through small and
/// unrestricted values.
SoundnessParams soundness_params(std::uint64_t seed);

/// Certificate soundness, quotient interlacing, Cheeger sandwich and
/// spectral duality on trials random regular multigraphs, seeds
/// seed .. seed+trials-1.
SuiteResult run_thm_soundness(long trials, std::uint64_t seed);

/// Quotient spectra against graph spectra for random multigraphs and
/// random partitions.
SuiteResult run_interlacing(long trials, std::uint64_t seed);

/// Flow-based kappa and kappa' against the exhaustive oracles, n <= 12.
SuiteResult run_oracle_equivalence(long trials, std::uint64_t seed);

/// Expected truth of each sign condition of a case, from the reference
/// symbolic reductions. cond 0 is the Q' condition (c2 cases only), cond 1
/// the Q condition.
bool reference_case_region(CaseId id, int cond, int d, int n);

/// Every case over d in [3, max_d] (fixed d for c2a-c2c) and
/// n in [domain start, max_n], compared with reference_case_region.
SuiteResult run_case_checks(int max_d = 40, int max_n = 200);

/// Frozen member counts; the A_10 value is also reproduced by an
/// exhaustive scan of all cubic multigraphs on 10 vertices.
inline constexpr int kGoldenB[] = {3, 12, 64, 437};  // B5, B7, B9, B11
std::optional<std::size_t> golden_A_count(int i, bool include_extra_gadget);

struct FamilyVerifyOptions {
  /// Skip A_18.
  bool sample = false;
  /// Also verify A_18 with the extra middle gadget.
  bool include_extra_gadget = true;
};

SuiteResult run_family_verify(const FamilyVerifyOptions& opts = {});

std::vector<std::string_view> suite_names();
bool suite_is_randomized(std::string_view name);

}  // namespace regcert
