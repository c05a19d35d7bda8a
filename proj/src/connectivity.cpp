#include "regcert/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <string>

#include "regcert/kernels.hpp"
#include "regcert/spectral.hpp"

namespace regcert {
namespace {

void require_order(const Multigraph& g, const char* what) {
  if (g.order() < 2) throw GraphError(std::string(what) + ": needs at least two vertices");
}

// Unit-capacity max-flow on a small dense digraph (BFS augmenting paths).
class DenseFlow {
 public:
  explicit DenseFlow(int n) : n_(n), cap_(static_cast<std::size_t>(n) * n, 0) {}

  void add(int u, int v, int c) { cap_[idx(u, v)] += c; }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[static_cast<std::size_t>(s)] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && parent[static_cast<std::size_t>(t)] < 0) {
        const int u = q.front();
        q.pop();
        for (int v = 0; v < n_; ++v) {
          if (parent[static_cast<std::size_t>(v)] < 0 && cap_[idx(u, v)] > 0) {
            parent[static_cast<std::size_t>(v)] = u;
            q.push(v);
          }
        }
      }
      if (parent[static_cast<std::size_t>(t)] < 0) break;
      for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)]) {
        const int u = parent[static_cast<std::size_t>(v)];
        --cap_[idx(u, v)];
        ++cap_[idx(v, u)];
      }
      ++flow;
    }
    return flow;
  }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  int n_;
  std::vector<int> cap_;
};

bool connected_without(const Multigraph& g, std::uint32_t removed) {
  const int n = g.order();
  int start = -1, remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!(removed >> v & 1u)) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining <= 1) return true;
  std::uint32_t seen = removed | (1u << start);
  std::vector<int> stack{start};
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!(seen >> v & 1u) && g.mult(u, v) > 0) {
        seen |= 1u << v;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == remaining;
}

}  // namespace

int edge_connectivity(const Multigraph& g) {
  require_order(g, "edge_connectivity");
  const int n = g.order();
  std::vector<long long> w(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) w[static_cast<std::size_t>(u) * n + v] = g.mult(u, v);
  auto W = [&](int u, int v) -> long long& { return w[static_cast<std::size_t>(u) * n + v]; };

  std::vector<int> alive(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) alive[static_cast<std::size_t>(v)] = v;
  long long best = std::numeric_limits<long long>::max();
  std::vector<long long> key(static_cast<std::size_t>(n));
  std::vector<char> added(static_cast<std::size_t>(n));

  while (alive.size() > 1) {
    // Maximum-adjacency ordering; the last two vertices give a cut-of-phase.
    std::fill(key.begin(), key.end(), 0);
    std::fill(added.begin(), added.end(), 0);
    int prev = -1, last = -1;
    for (std::size_t step = 0; step < alive.size(); ++step) {
      int pick = -1;
      for (int v : alive)
        if (!added[static_cast<std::size_t>(v)] &&
            (pick < 0 || key[static_cast<std::size_t>(v)] > key[static_cast<std::size_t>(pick)]))
          pick = v;
      if (pick < 0) break;
      added[static_cast<std::size_t>(pick)] = 1;
      prev = last;
      last = pick;
      for (int v : alive)
        if (!added[static_cast<std::size_t>(v)]) key[static_cast<std::size_t>(v)] += W(pick, v);
    }
    best = std::min(best, key[static_cast<std::size_t>(last)]);
    // Merge `last` into `prev`.
    for (int v : alive) {
      if (v == prev || v == last) continue;
      W(prev, v) += W(last, v);
      W(v, prev) = W(prev, v);
    }
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  return static_cast<int>(best);
}

int local_vertex_connectivity(const Multigraph& g, int s, int t) {
  const int n = g.order();
  if (s == t || g.mult(s, t) > 0) throw GraphError("local_vertex_connectivity: s and t must be distinct and non-adjacent");
  // Vertex v becomes v_in = 2v -> v_out = 2v+1 with capacity 1.
  DenseFlow f(2 * n);
  for (int v = 0; v < n; ++v) f.add(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.mult(u, v) > 0) f.add(2 * u + 1, 2 * v, n);
  return f.max_flow(2 * s + 1, 2 * t, n);
}

int vertex_connectivity(const Multigraph& g) {
  require_order(g, "vertex_connectivity");
  const int n = g.order();
  int k = n - 1;
  for (int i = 0; i <= k && i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.mult(i, j) == 0) k = std::min(k, local_vertex_connectivity(g, i, j));
  return k;
}

int brute_force_edge_connectivity(const Multigraph& g) {
  require_order(g, "brute_force_edge_connectivity");
  const int n = g.order();
  if (n > 20) throw GraphError("brute_force_edge_connectivity: n > 20");
  long long best = std::numeric_limits<long long>::max();
  // Vertex n-1 stays on the far side; mask is the near side.
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    long long cut = 0;
    for (int u = 0; u < n; ++u) {
      if (!(mask >> u & 1u)) continue;
      for (int v = 0; v < n; ++v)
        if (!(mask >> v & 1u)) cut += g.mult(u, v);
    }
    best = std::min(best, cut);
  }
  return static_cast<int>(best);
}

int brute_force_vertex_connectivity(const Multigraph& g) {
  require_order(g, "brute_force_vertex_connectivity");
  const int n = g.order();
  if (n > 20) throw GraphError("brute_force_vertex_connectivity: n > 20");
  for (int size = 0; size <= n - 2; ++size) {
    // All subsets of exactly `size` vertices, in increasing mask order.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      if (!connected_without(g, mask)) return size;
    }
  }
  return n - 1;
}

namespace {

struct BridgeScan {
  const Multigraph& g;
  std::vector<int> disc, low, sub;
  int timer = 0;
  std::vector<std::pair<Edge, int>> bridges;  // edge and subtree size below it
  std::vector<int> comp_size_of_root;

  explicit BridgeScan(const Multigraph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0),
        sub(static_cast<std::size_t>(graph.order()), 1) {}

  void dfs(int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    for (int v = 0; v < g.order(); ++v) {
      const int m = g.mult(u, v);
      if (m == 0) continue;
      if (v == parent) {
        // A parallel copy of the tree edge acts as a back edge.
        if (m > 1) low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
        continue;
      }
      if (disc[static_cast<std::size_t>(v)] >= 0) {
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      } else {
        dfs(v, u);
        sub[static_cast<std::size_t>(u)] += sub[static_cast<std::size_t>(v)];
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(u)])
          bridges.push_back({{std::min(u, v), std::max(u, v)}, sub[static_cast<std::size_t>(v)]});
      }
    }
  }
};

}  // namespace

std::vector<Edge> cut_edges(const Multigraph& g) {
  BridgeScan scan(g);
  for (int v = 0; v < g.order(); ++v)
    if (scan.disc[static_cast<std::size_t>(v)] < 0) scan.dfs(v, -1);
  std::vector<Edge> out;
  for (const auto& [e, size] : scan.bridges) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CutEdgeChoice> min_sc_cut_edge(const Multigraph& g) {
  if (!g.is_connected()) throw GraphError("min_sc_cut_edge: graph is disconnected");
  BridgeScan scan(g);
  scan.dfs(0, -1);
  std::optional<CutEdgeChoice> best;
  for (const auto& [e, below] : scan.bridges) {
    const int sc = std::min(below, g.order() - below);
    if (!best || sc < best->sc || (sc == best->sc && e < best->edge)) best = CutEdgeChoice{e, sc};
  }
  return best;
}

ConnectivityReport connectivity_report(const Multigraph& g) {
  ConnectivityReport r;
  r.is_connected = g.is_connected();
  r.kappa = vertex_connectivity(g);
  r.kappa_prime = edge_connectivity(g);
  r.cut_edges = cut_edges(g);
  if (r.is_connected) {
    if (auto c = min_sc_cut_edge(g)) r.sc_min = c->sc;
  } else if (!r.cut_edges.empty()) {
    // Per-component scan: remove each bridge and measure its two sides.
    r.sc_min = g.order();
    for (const auto& [u, v] : r.cut_edges) {
      MultigraphBuilder b(g);
      b.set_mult(u, v, 0);
      const auto comp = b.build().components();
      const int cu = static_cast<int>(std::count(comp.begin(), comp.end(), comp[static_cast<std::size_t>(u)]));
      const int cv = static_cast<int>(std::count(comp.begin(), comp.end(), comp[static_cast<std::size_t>(v)]));
      r.sc_min = std::min({r.sc_min, cu, cv});
    }
  }
  return r;
}

CheegerValue cheeger_exact(const Multigraph& g) {
  require_order(g, "cheeger_constant");
  const int n = g.order();
  if (n > kMaxCheegerOrder) throw GraphError("cheeger_constant: n > " + std::to_string(kMaxCheegerOrder));
  // Gray-code walk over all subsets. in_s[u] = edges from u into S.
  std::vector<std::int32_t> in_s(static_cast<std::size_t>(n), 0);
  long long boundary = 0;
  int size = 0;
  CheegerValue best{std::numeric_limits<long long>::max() / 4, 1};
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    const bool adding = !(gray >> v & 1u);
    gray ^= std::uint64_t{1} << v;
    if (adding) {
      boundary += g.degree(v) - 2LL * in_s[static_cast<std::size_t>(v)];
      ++size;
    } else {
      boundary -= g.degree(v) - 2LL * in_s[static_cast<std::size_t>(v)];
      --size;
    }
    simd::accumulate_row(in_s, g.row(v), adding ? 1 : -1);
    if (2 * size <= n && boundary * best.size < best.boundary * size) best = {boundary, size};
  }
  return best;
}

double cheeger_constant(const Multigraph& g) { return cheeger_exact(g).value(); }

CheegerSandwich cheeger_sandwich(const Multigraph& g, int d, double tol) {
  if (!is_regular(g, d)) throw GraphError("cheeger_sandwich: graph is not " + std::to_string(d) + "-regular");
  const double gap = std::max(0.0, d - lambda2(g));
  CheegerSandwich s;
  s.lower = gap / 2.0;
  s.h = cheeger_constant(g);
  s.upper = std::sqrt(2.0 * d * gap);
  s.holds = s.lower <= s.h + tol && s.h <= s.upper + tol;
  return s;
}

}  // namespace regcert
