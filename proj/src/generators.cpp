#include "regcert/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace regcert {

Multigraph random_regular_multigraph(int n, int d, int max_mult, std::uint64_t seed, int budget) {
  if (n < 2) throw GraphError("random_regular_multigraph: n must be >= 2");
  if (d < 1) throw GraphError("random_regular_multigraph: d must be >= 1");
  if (max_mult < 1) throw GraphError("random_regular_multigraph: max_mult must be >= 1");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw GraphError("random_regular_multigraph: n*d must be even");
  if (d > static_cast<long long>(n - 1) * max_mult)
    throw GraphError("random_regular_multigraph: d exceeds (n-1)*max_mult");

  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs.push_back(v);

  std::vector<std::int32_t> m(static_cast<std::size_t>(n) * n);
  for (int attempt = 0; attempt < budget; ++attempt) {
    // Fisher-Yates with our own index draws so the stream is identical
    // across standard library implementations.
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(stubs[i], stubs[j]);
    }
    std::fill(m.begin(), m.end(), 0);
    bool ok = true;
    for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
      const int u = stubs[i];
      const int v = stubs[i + 1];
      if (u == v) { ok = false; break; }
      auto& a = m[static_cast<std::size_t>(u) * n + v];
      if (++a > max_mult) ok = false;
      m[static_cast<std::size_t>(v) * n + u] = a;
    }
    if (ok) return Multigraph::from_matrix(n, m);
  }
  throw SamplingError("random_regular_multigraph: no valid sample in " + std::to_string(budget) +
                      " attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                      ", max_mult=" + std::to_string(max_mult) + ")");
}

Multigraph random_multigraph(int n, double edge_prob, int max_mult, std::uint64_t seed) {
  if (n < 1) throw GraphError("random_multigraph: n must be >= 1");
  if (max_mult < 1) throw GraphError("random_multigraph: max_mult must be >= 1");
  std::mt19937_64 rng(seed);
  MultigraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const auto m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_mult)) + 1;
      if (x < edge_prob) b.set_mult(u, v, m);
    }
  return b.build();
}

Partition random_partition(int n, int blocks, std::uint64_t seed) {
  if (blocks < 1 || blocks > n) throw GraphError("random_partition: need 1 <= blocks <= n");
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = order.size() - 1; i > 0; --i)
    std::swap(order[i], order[static_cast<std::size_t>(rng() % (i + 1))]);
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
  for (int k = 0; k < n; ++k) {
    const auto b = k < blocks ? static_cast<std::size_t>(k) : static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(blocks));
    parts[b].push_back(order[static_cast<std::size_t>(k)]);
  }
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return Partition(n, std::move(parts));
}

Multigraph extremal_5vertex(int k) {
  if (k < 1) throw GraphError("extremal_5vertex: k must be >= 1");
  // Pairs {0,1} and {3,4}; vertex 2 is the cut-vertex.
  MultigraphBuilder b(5);
  b.set_mult(0, 1, 3 * k).set_mult(3, 4, 3 * k);
  for (int v : {0, 1, 3, 4}) b.set_mult(v, 2, k);
  return b.build();
}

Multigraph extremal_6vertex(int d) {
  if (d < 3 || d % 2 == 0) throw GraphError("extremal_6vertex: d must be odd and >= 3");
  enum { a = 0, b = 1, v1 = 2, v2 = 3, c = 4, e = 5 };
  MultigraphBuilder g(6);
  g.set_mult(a, b, (d + 1) / 2).set_mult(a, v1, (d - 1) / 2).set_mult(b, v1, (d - 1) / 2);
  g.set_mult(c, e, (d + 1) / 2).set_mult(c, v2, (d - 1) / 2).set_mult(e, v2, (d - 1) / 2);
  g.set_mult(v1, v2, 1);
  return g.build();
}

Multigraph complete_graph(int n) {
  MultigraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.set_mult(u, v, 1);
  return b.build();
}

Multigraph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle_graph: n must be >= 3");
  MultigraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.set_mult(v, (v + 1) % n, 1);
  return b.build();
}

Multigraph path_graph(int n) {
  MultigraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.set_mult(v, v + 1, 1);
  return b.build();
}

Multigraph star_graph(int n) {
  MultigraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.set_mult(0, v, 1);
  return b.build();
}

Multigraph petersen_graph() {
  MultigraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.set_mult(i, (i + 1) % 5, 1);          // outer cycle
    b.set_mult(i, i + 5, 1);                // spokes
    b.set_mult(5 + i, 5 + (i + 2) % 5, 1);  // inner pentagram
  }
  return b.build();
}

}  // namespace regcert
