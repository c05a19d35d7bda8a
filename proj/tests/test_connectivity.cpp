#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "regcert/connectivity.hpp"
#include "regcert/enumerate.hpp"
#include "regcert/generators.hpp"
#include "regcert/spectral.hpp"

using namespace regcert;
using oracle::mg;

TEST_SUITE("connectivity") {
  TEST_CASE("edge_connectivity examples") {
    CHECK(edge_connectivity(cycle_graph(5)) == 2);
    CHECK(edge_connectivity(extremal_6vertex(3)) == 1);
    CHECK(edge_connectivity(petersen_graph()) == 3);
    CHECK(oracle::edge_connectivity(petersen_graph()) == 3);
    CHECK(edge_connectivity(mg("mg 2\n0 3\n3 0")) == 3);
    CHECK(edge_connectivity(disjoint_union(complete_graph(3), complete_graph(3))) == 0);
    CHECK_THROWS(edge_connectivity(Multigraph(1)));
  }

  TEST_CASE("vertex_connectivity examples") {
    CHECK(vertex_connectivity(extremal_5vertex(1)) == 1);
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(vertex_connectivity(path_graph(3)) == 1);
    CHECK(vertex_connectivity(petersen_graph()) == 3);
    CHECK(vertex_connectivity(mg("mg 2\n0 5\n5 0")) == 1);
    CHECK(vertex_connectivity(disjoint_union(complete_graph(3), complete_graph(3))) == 0);
    CHECK_THROWS(vertex_connectivity(Multigraph(1)));
  }

  TEST_CASE("brute-force oracles on small graphs") {
    CHECK(brute_force_edge_connectivity(cycle_graph(5)) == 2);
    CHECK(brute_force_vertex_connectivity(cycle_graph(5)) == 2);
    CHECK(brute_force_vertex_connectivity(complete_graph(5)) == 4);
    CHECK_THROWS(brute_force_edge_connectivity(cycle_graph(21)));
  }

  TEST_CASE("flow-based kappa' agrees with both oracles, n <= 12") {
    std::mt19937_64 rng(500);
    for (int k = 0; k < 500; ++k) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const auto g = random_multigraph(n, 0.15 + 0.7 * (k % 7) / 6.0, 1 + k % 3, rng());
      const int flow = edge_connectivity(g);
      CHECK(flow == brute_force_edge_connectivity(g));
      CHECK(flow == oracle::edge_connectivity(g));
    }
  }

  TEST_CASE("flow-based kappa agrees with both oracles, n <= 10") {
    std::mt19937_64 rng(501);
    for (int k = 0; k < 500; ++k) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const auto g = random_multigraph(n, 0.2 + 0.7 * (k % 7) / 6.0, 1 + k % 3, rng());
      const int flow = vertex_connectivity(g);
      CHECK(flow == brute_force_vertex_connectivity(g));
      CHECK(flow == oracle::vertex_connectivity(g));
    }
  }

  TEST_CASE("kappa <= kappa' <= d on random regular multigraphs") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const int n = 4 + static_cast<int>(s % 13), d = 3 + static_cast<int>(s / 13 % 6);
      if (n * d % 2 || d > (n - 1) * 3) continue;
      const auto g = random_regular_multigraph(n, d, 3, s, 100000);
      const auto r = connectivity_report(g);
      CHECK(r.kappa <= r.kappa_prime);
      CHECK(r.kappa_prime <= d);
      CHECK(r.is_connected == (r.kappa_prime >= 1));
    }
  }

  TEST_CASE("cut-edge examples") {
    const auto e6 = extremal_6vertex(3);
    CHECK(cut_edges(e6) == std::vector<Edge>{{2, 3}});
    const auto c = min_sc_cut_edge(e6);
    REQUIRE(c);
    CHECK(c->sc == 3);
    CHECK(cut_edges(cycle_graph(6)).empty());
    CHECK_FALSE(min_sc_cut_edge(cycle_graph(6)));
    CHECK_THROWS(min_sc_cut_edge(disjoint_union(cycle_graph(3), cycle_graph(3))));
    // Tie: both end edges of P4 leave a single vertex; the smaller edge wins.
    const auto p = min_sc_cut_edge(path_graph(4));
    REQUIRE(p);
    CHECK(p->edge == Edge{0, 1});
    CHECK(p->sc == 1);
  }

  TEST_CASE("A_14 members have one cut-edge with sc = 7") {
    for (const auto& g : build_A(14)) {
      const auto r = connectivity_report(g);
      CHECK(r.cut_edges.size() == 1);
      CHECK(r.sc_min == 7);
    }
  }

  TEST_CASE("cut_edges matches the removal oracle") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const auto g = random_multigraph(n, 0.25, 1 + k % 2, rng());
      const auto got = cut_edges(g);
      CHECK(got == oracle::bridges(g));
      if (g.is_connected()) {
        // Removing a reported cut-edge disconnects; removing any other edge does not.
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v) {
            if (!g.mult(u, v)) continue;
            const bool is_cut = std::find(got.begin(), got.end(), Edge{u, v}) != got.end();
            CHECK(oracle::connected(oracle::without_edge(g, u, v)) == !is_cut);
          }
        const auto best = min_sc_cut_edge(g);
        CHECK(best.has_value() == !got.empty());
        if (best) {
          int want = n;
          for (auto [u, v] : got) want = std::min(want, oracle::smaller_side(g, u, v));
          CHECK(best->sc == want);
          CHECK(connectivity_report(g).sc_min == want);
        }
      }
    }
  }

  TEST_CASE("cheeger_constant examples") {
    CHECK(cheeger_constant(complete_graph(4)) == doctest::Approx(2.0));
    CHECK(cheeger_constant(disjoint_union(cycle_graph(3), cycle_graph(3))) == 0);
    CHECK(cheeger_constant(cycle_graph(6)) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS(cheeger_constant(cycle_graph(23)));
  }

  TEST_CASE("Gray-code Cheeger scan matches the direct oracle") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 150; ++k) {
      const int n = 2 + static_cast<int>(rng() % 12);
      const auto g = random_multigraph(n, 0.4, 3, rng());
      const auto c = cheeger_exact(g);
      CHECK(c.value() == doctest::Approx(oracle::cheeger(g)).epsilon(1e-12));
      CHECK(2 * c.size <= n);
    }
  }

  TEST_CASE("cheeger_sandwich examples") {
    const auto k4 = cheeger_sandwich(complete_graph(4), 3);
    CHECK(k4.lower == doctest::Approx(2.0));
    CHECK(k4.h == doctest::Approx(2.0));
    CHECK(k4.upper == doctest::Approx(std::sqrt(24.0)));  // sqrt(2 * 3 * 4)
    CHECK(k4.holds);
    const auto c6 = cheeger_sandwich(cycle_graph(6), 2);
    CHECK(c6.lower == doctest::Approx(0.5));
    CHECK(c6.h == doctest::Approx(2.0 / 3.0));
    CHECK(c6.upper == doctest::Approx(2.0));
    const auto dis = cheeger_sandwich(disjoint_union(complete_graph(4), complete_graph(4)), 3);
    CHECK(dis.lower == doctest::Approx(0.0));
    CHECK(dis.h == 0);
    CHECK(dis.upper == doctest::Approx(0.0));
    CHECK(dis.holds);
    CHECK_THROWS(cheeger_sandwich(path_graph(4), 2));
  }

  TEST_CASE("Cheeger sandwich holds on random regular multigraphs, n <= 16") {
    for (std::uint64_t s = 0; s < 300; ++s) {
      const int n = 4 + static_cast<int>(s % 13), d = 3 + static_cast<int>(s % 5);
      if (n * d % 2) continue;
      CHECK(cheeger_sandwich(random_regular_multigraph(n, d, d, s), d).holds);
    }
  }
}
