#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regcert/multigraph.hpp"

namespace regcert {

using Edge = std::pair<int, int>;  // always stored with first < second

struct ConnectivityReport {
  int kappa = 0;        // vertex connectivity (underlying simple graph)
  int kappa_prime = 0;  // edge connectivity (with multiplicities)
  bool is_connected = false;
  std::vector<Edge> cut_edges;
  /// Smallest component order over all cut-edge removals; 0 without cut-edges.
  int sc_min = 0;
};

/// Global minimum edge cut counting multiplicities (Stoer-Wagner).
int edge_connectivity(const Multigraph& g);

/// Vertex connectivity of the underlying simple graph; K_n has n-1.
/// Local connectivities come from unit-capacity max-flow on the
/// vertex-split digraph, over Even's O(kappa * n) source/target pairs.
int vertex_connectivity(const Multigraph& g);

/// Minimum number of internally disjoint s-t paths (s, t non-adjacent).
int local_vertex_connectivity(const Multigraph& g, int s, int t);

/// Exhaustive oracles with the same contracts. n <= 20.
int brute_force_edge_connectivity(const Multigraph& g);
int brute_force_vertex_connectivity(const Multigraph& g);

/// Multiplicity-one edges whose removal disconnects their component.
std::vector<Edge> cut_edges(const Multigraph& g);

struct CutEdgeChoice {
  Edge edge;
  int sc = 0;  // order of the smaller side after removing `edge`
};

/// The cut-edge minimizing the smaller component's order; ties go to the
/// lexicographically smallest edge. nullopt when g has no cut-edge.
/// Requires a connected graph.
std::optional<CutEdgeChoice> min_sc_cut_edge(const Multigraph& g);

ConnectivityReport connectivity_report(const Multigraph& g);

/// Exact Cheeger minimum boundary / |S| over 1 <= |S| <= n/2.
struct CheegerValue {
  long long boundary = 0;
  int size = 1;
  double value() const { return static_cast<double>(boundary) / size; }
};

inline constexpr int kMaxCheegerOrder = 22;

CheegerValue cheeger_exact(const Multigraph& g);
double cheeger_constant(const Multigraph& g);

struct CheegerSandwich {
  double lower = 0;  // (d - lambda2) / 2
  double h = 0;
  double upper = 0;  // sqrt(2 d (d - lambda2))
  bool holds = false;
};

/// Requires g to be d-regular.
CheegerSandwich cheeger_sandwich(const Multigraph& g, int d, double tol = 1e-8);

}  // namespace regcert
