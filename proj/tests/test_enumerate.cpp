#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "regcert/bounds.hpp"
#include "regcert/canonical.hpp"
#include "regcert/enumerate.hpp"
#include "regcert/generators.hpp"
#include "regcert/verify.hpp"

using namespace regcert;
using oracle::mg;

namespace {

std::set<std::vector<int>> brute_keys(const std::vector<Multigraph>& gs) {
  std::set<std::vector<int>> out;
  for (const auto& g : gs) out.insert(oracle::degree_class_key(g));
  return out;
}

bool bridgeless_connected(const Multigraph& g) { return oracle::connected(g) && oracle::bridges(g).empty(); }

DegreeTwoProfile single(bool cycle, int k) {
  DegreeTwoProfile p;
  p.graph_order = k;
  FComponent c;
  c.cycle = cycle;
  for (int v = 0; v < k; ++v) c.vertices.push_back(v);
  p.components.push_back(c);
  return p;
}

/// Cubic multigraphs on n vertices with kappa' = 1 whose cut-edges all leave
/// sides of order >= min_side, using only the oracle helpers for the filter.
// Cubic graphs on 10+ vertices are too large for the permutation oracle;
// canonical keys are checked against it separately on small orders.
std::set<CanonicalKey> canon_keys(const std::vector<Multigraph>& gs) {
  std::set<CanonicalKey> out;
  for (const auto& g : gs) out.insert(canonical_key(g));
  return out;
}

std::set<CanonicalKey> scan_A(int n, int min_side) {
  std::set<CanonicalKey> out;
  for (const auto& g : gen_multigraphs(std::vector<int>(static_cast<std::size_t>(n), 3), 3)) {
    if (!oracle::connected(g)) continue;
    const auto br = oracle::bridges(g);
    if (br.empty()) continue;
    bool ok = true;
    for (auto [u, v] : br) ok = ok && oracle::smaller_side(g, u, v) >= min_side;
    if (ok) out.insert(canonical_key(g));
  }
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("is_graphical") {
    CHECK(is_graphical(std::vector<int>{2, 2, 2}));
    CHECK(is_graphical(std::vector<int>{3, 3, 3, 3}));
    CHECK_FALSE(is_graphical(std::vector<int>{3, 3, 1, 1}));
    CHECK_FALSE(is_graphical(std::vector<int>{1, 1, 1}));
    CHECK_FALSE(is_graphical(std::vector<int>{4, 1, 1, 1}));
  }

  TEST_CASE("gen_simple_graphs examples") {
    const auto k3 = gen_simple_graphs({2, 2, 2});
    REQUIRE(k3.size() == 1);
    CHECK(canonical_key(k3[0]) == canonical_key(complete_graph(3)));
    const auto k4 = gen_simple_graphs({3, 3, 3, 3});
    REQUIRE(k4.size() == 1);
    CHECK(canonical_key(k4[0]) == canonical_key(complete_graph(4)));
    CHECK_THROWS_AS(gen_simple_graphs({3, 3, 1, 1}), EnumerationError);
  }

  TEST_CASE("S(2,7) against the edge-subset oracle") {
    const auto seq = s_degree_sequence(2, 7);
    CHECK(seq == std::vector<int>{3, 3, 2, 2, 2, 2, 2});
    const auto got = build_S(2, 7);
    const auto want = oracle::simple_graphs_by_edge_subsets(7, seq);
    CHECK(got.size() == want.size());
    CHECK(brute_keys(got) == brute_keys(want));
    CHECK(got.size() == 7);
  }

  TEST_CASE("S(l,j) for j = 5, 7 against the oracle") {
    for (int j : {5, 7})
      for (int l = 0; 2 * l + 1 <= j; ++l) {
        const auto seq = s_degree_sequence(l, j);
        if (!is_graphical(seq)) continue;
        CHECK(brute_keys(build_S(l, j)) == brute_keys(oracle::simple_graphs_by_edge_subsets(j, seq)));
      }
  }

  TEST_CASE("gen_multigraphs against labeled enumeration") {
    const std::vector<std::pair<std::vector<int>, int>> cases{
        {{3, 3}, 3},          {{3, 3, 3, 3}, 3},          {{3, 3, 2, 2}, 2},         {{4, 4, 4, 4, 4}, 2},
        {{3, 3, 3, 3, 3, 3}, 3}, {{4, 3, 3, 2, 2, 2}, 2}, {{3, 3, 3, 3, 3, 3, 2}, 2}, {{5, 5, 4, 4, 3, 3}, 3}};
    for (const auto& [deg, cap] : cases) {
      CAPTURE(deg.size());
      const auto got = gen_multigraphs(deg, cap);
      const auto want = oracle::iso_classes(oracle::labeled_multigraphs(deg, cap));
      CHECK(got.size() == want.size());
      CHECK(brute_keys(got) == brute_keys(want));
      for (const auto& g : got) CHECK(g.max_multiplicity() <= cap);
    }
  }

  TEST_CASE("connected cubic loopless multigraph counts") {
    // 1, 2, 6, 20, 91, 509 on 2..12 vertices.
    const int want[] = {1, 2, 6, 20, 91, 509};
    for (int k = 0; k < 6; ++k) {
      const int n = 2 * (k + 1);
      int connected = 0;
      for (const auto& g : gen_multigraphs(std::vector<int>(static_cast<std::size_t>(n), 3), 3)) connected += g.is_connected();
      CHECK(connected == want[k]);
    }
  }

  TEST_CASE("output order is deterministic and sorted by key") {
    const auto a = gen_multigraphs({3, 3, 3, 3, 3, 3, 3, 3}, 3);
    const auto b = gen_multigraphs({3, 3, 3, 3, 3, 3, 3, 3}, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k] == b[k]);
      if (k) CHECK(canonical_key(a[k - 1]) < canonical_key(a[k]));
    }
  }

  TEST_CASE("classify_f examples") {
    CHECK(classify_f(cycle_graph(5)).verdict == FVerdict::keep);
    CHECK(classify_f(disjoint_union(cycle_graph(3), complete_graph(4))).verdict == FVerdict::reject_short_cycle);
    int multiple = 0;
    for (const auto& h : build_S(2, 7)) {
      const auto c = classify_f(h);
      if (c.verdict == FVerdict::reject_multiple_odd_paths) {
        ++multiple;
        CHECK(c.profile.odd_paths() > 1);
      }
    }
    CHECK(multiple >= 1);
    // K4 minus an edge: f(H) is two isolated vertices, two odd paths.
    CHECK(classify_f(gadget_graph(Gadget::J4_prime)).verdict == FVerdict::reject_multiple_odd_paths);
    CHECK_FALSE(verdict_reason(FVerdict::reject_short_cycle).empty());
  }

  TEST_CASE("pipeline for M(2,7)") {
    const auto S = build_S(2, 7);
    CHECK(S.size() == 7);
    int two_conn = 0, kept = 0;
    for (const auto& h : S) {
      if (!is_two_vertex_connected(h)) continue;
      ++two_conn;
      kept += classify_f(h).verdict == FVerdict::keep;
    }
    CHECK(two_conn == 4);
    CHECK(kept == 3);
    CHECK(build_M(2, 7).size() == 3);
  }

  TEST_CASE("max_matchings_of_f examples") {
    CHECK(max_matchings_of_f(single(false, 5)).size() == 3);
    CHECK(max_matchings_of_f(single(false, 3)).size() == 2);
    CHECK(max_matchings_of_f(single(false, 2)).size() == 1);
    for (int k = 1; k <= 11; ++k) {
      CHECK(max_matchings_of_f(single(false, k)).size() == static_cast<std::size_t>(oracle::path_max_matchings(k)));
      for (const auto& m : max_matchings_of_f(single(false, k))) CHECK(static_cast<int>(m.size()) == k / 2);
    }
    CHECK(max_matchings_of_f(single(true, 6)).size() == 2);
    CHECK(max_matchings_of_f(single(true, 7)).size() == 7);
  }

  TEST_CASE("B5 against the full 5-vertex matrix scan") {
    // Every symmetric matrix with entries 0..3 on 10 pairs.
    std::set<std::vector<int>> want;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
    for (int code = 0; code < (1 << 20); ++code) {
      int deg[5] = {0, 0, 0, 0, 0};
      for (int p = 0; p < 10; ++p) {
        const int m = code >> (2 * p) & 3;
        deg[pairs[p].first] += m;
        deg[pairs[p].second] += m;
      }
      std::vector<int> s(deg, deg + 5);
      std::sort(s.begin(), s.end());
      if (s != std::vector<int>{2, 3, 3, 3, 3}) continue;
      MultigraphBuilder b(5);
      for (int p = 0; p < 10; ++p)
        if (const int m = code >> (2 * p) & 3) b.set_mult(pairs[p].first, pairs[p].second, m);
      const auto g = b.build();
      if (bridgeless_connected(g)) want.insert(oracle::degree_class_key(g));
    }
    const auto got = build_B(5);
    CHECK(brute_keys(got) == want);
    CHECK(got.size() == static_cast<std::size_t>(kGoldenB[0]));
  }

  TEST_CASE("B7 against labeled enumeration") {
    std::vector<Multigraph> want;
    for (const auto& g : oracle::labeled_multigraphs({3, 3, 3, 3, 3, 3, 2}, 3))
      if (bridgeless_connected(g)) want.push_back(g);
    const auto got = build_B(7);
    CHECK(brute_keys(got) == brute_keys(want));
    CHECK(got.size() == static_cast<std::size_t>(kGoldenB[1]));
  }

  TEST_CASE("B_j members satisfy the definition") {
    const int js[] = {5, 7, 9, 11};
    for (int k = 0; k < 4; ++k) {
      const auto B = build_B(js[k]);
      CHECK(B.size() == static_cast<std::size_t>(kGoldenB[k]));
      for (const auto& g : B) {
        auto seq = degree_sequence(g);
        CHECK(seq.back() == 2);
        CHECK(seq[seq.size() - 2] == 3);
        CHECK(seq.front() == 3);
        CHECK(g.is_connected());
        CHECK(cut_edges(g).empty());
        CHECK(g.max_multiplicity() <= 2);
      }
    }
  }

  TEST_CASE("M(l,j) are disjoint and carry l double edges") {
    for (int j : {5, 7, 9}) {
      std::set<CanonicalKey> all;
      std::size_t total = 0;
      for (int l = 0; 2 * l + 1 <= j; ++l)
        for (const auto& g : build_M(l, j)) {
          int doubles = 0;
          for (int u = 0; u < j; ++u)
            for (int v = u + 1; v < j; ++v) doubles += g.mult(u, v) == 2;
          CHECK(doubles == l);
          all.insert(canonical_key(g));
          ++total;
        }
      CHECK(all.size() == total);
      CHECK(total == build_B(j).size());
    }
  }

  TEST_CASE("join examples") {
    const auto B5 = build_B(5);
    const auto B7 = build_B(7);
    const auto g = join(B5[0], B5[1]);
    CHECK(family_predicate_violation(10, g) == std::nullopt);
    CHECK(edge_connectivity(g) == 1);
    CHECK(min_sc_cut_edge(g)->sc == 5);
    const auto h = join(B5[0], B5[2], Gadget::J2);
    CHECK(h.order() == 12);
    CHECK(family_predicate_violation(12, h) == std::nullopt);
    const auto k = join(B7[0], B7[3], Gadget::J4_prime);
    CHECK(k.order() == 18);
    CHECK(is_regular(k, 3));
    CHECK(family_predicate_violation(18, k) == std::nullopt);
    CHECK_THROWS_AS(join(complete_graph(4), B5[0]), EnumerationError);
    CHECK(gadget_ports(Gadget::J2) == std::pair<int, int>{0, 1});
    CHECK(degree_two_vertex(B5[0]) >= 0);
  }

  TEST_CASE("family terms") {
    std::vector<std::string> names;
    for (const auto& t : family_terms(12)) names.push_back(family_term_name(t));
    CHECK(names == std::vector<std::string>{"B5-B7", "B5-J2-B5"});
    CHECK(family_terms(18).size() == 5);
    CHECK(family_terms(18, {true}).size() == 6);
    CHECK(family_term_name(family_terms(18, {true}).back()) == "B7-J4d-B7");
  }

  TEST_CASE("A_10 and A_12 against exhaustive cubic scans") {
    CHECK(canon_keys(build_A(10)) == scan_A(10, 5));
    CHECK(canon_keys(build_A(12)) == scan_A(12, 5));
    CHECK(build_A(10).size() == *golden_A_count(10, false));
    CHECK(build_A(12).size() == *golden_A_count(12, false));
  }

  TEST_CASE("A_i structural predicates") {
    FamilyBuilder fb;
    for (int i : {10, 12, 14, 16}) {
      const auto A = fb.A(i);
      CHECK(A.size() == *golden_A_count(i, false));
      std::set<int> cut_counts;
      for (const auto& g : A) {
        CHECK(family_predicate_violation(i, g) == std::nullopt);
        cut_counts.insert(static_cast<int>(oracle::bridges(g).size()));
      }
      if (i == 10 || i == 14) CHECK(cut_counts == std::set<int>{1});
      else CHECK(*cut_counts.rbegin() <= 2);
    }
    CHECK(family_predicate_violation(10, extremal_6vertex(3)).has_value());
  }

  TEST_CASE("verify_family: lambda2 >= rho(3, i)") {
    for (int i : {10, 12, 14}) {
      const auto r = verify_family(i);
      CHECK(r.passed);
      CHECK(r.min_lambda2 >= rho(3, i) - 1e-9);
      CHECK(r.margin == doctest::Approx(r.min_lambda2 - r.rho));
      CHECK(r.argmin.lambda2 == r.min_lambda2);
    }
    CHECK(verify_family(10).min_lambda2 == doctest::Approx(pi_bound(3)).epsilon(1e-9));
  }

  TEST_CASE("manifest and files") {
    const auto members = describe_members(build_B(5));
    const auto csv = manifest_csv("B5", members);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "family,key,n,num_cut_edges,lambda2");
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(line.rfind("B5,n5", 0) == 0);
      CHECK(line.size() - line.rfind('.') == 10);  // 9 decimals
    }
    CHECK(rows == 3);
    const auto dir = std::filesystem::temp_directory_path() / "regcert_manifest_test";
    std::filesystem::remove_all(dir);
    write_family(dir, "B5", members);
    CHECK(std::filesystem::exists(dir / "manifest.csv"));
    for (const auto& m : members) {
      const auto path = dir / (m.key.text() + ".mg");
      REQUIRE(std::filesystem::exists(path));
      CHECK(read_mg_file(path) == m.graph);
    }
    std::ifstream f(dir / "manifest.csv");
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == csv);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("parameter ranges") {
    CHECK_THROWS_AS(build_B(6), EnumerationError);
    CHECK_THROWS_AS(build_A(11), EnumerationError);
    CHECK_THROWS_AS(build_S(0, 13), EnumerationError);
  }
}
