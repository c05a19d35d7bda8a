#include "regcert/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace regcert {

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 1) throw GraphError("multigraph needs at least one vertex");
  m_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  deg_.assign(static_cast<std::size_t>(n), 0);
}

Multigraph Multigraph::from_matrix(int n, std::vector<std::int32_t> entries) {
  if (n < 1) throw GraphError("multigraph needs at least one vertex");
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw GraphError("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(n * n));
  Multigraph g(n);
  g.m_ = std::move(entries);
  g.refresh_degrees();
  g.check_invariants();
  return g;
}

Multigraph Multigraph::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::int32_t> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw GraphError("matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_matrix(n, std::move(flat));
}

void Multigraph::refresh_degrees() {
  deg_.assign(static_cast<std::size_t>(n_), 0);
  for (int u = 0; u < n_; ++u) {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += m_[idx(u, v)];
    deg_[static_cast<std::size_t>(u)] = s;
  }
}

void Multigraph::check_invariants() const {
  for (int u = 0; u < n_; ++u) {
    if (m_[idx(u, u)] != 0)
      throw GraphError("loop at vertex " + std::to_string(u) + " (diagonal must be zero)");
    int s = 0;
    for (int v = 0; v < n_; ++v) {
      const auto a = m_[idx(u, v)];
      if (a < 0)
        throw GraphError("negative multiplicity at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
      if (a != m_[idx(v, u)])
        throw GraphError("matrix not symmetric at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
      s += a;
    }
    if (s != deg_[static_cast<std::size_t>(u)]) throw GraphError("stale degree cache");
  }
}

int Multigraph::min_degree() const { return *std::min_element(deg_.begin(), deg_.end()); }
int Multigraph::max_degree() const { return *std::max_element(deg_.begin(), deg_.end()); }

long long Multigraph::size() const {
  long long s = 0;
  for (int d : deg_) s += d;
  return s / 2;
}

int Multigraph::max_multiplicity() const {
  std::int32_t best = 0;
  for (auto a : m_) best = std::max(best, a);
  return best;
}

std::optional<int> Multigraph::regular_degree() const {
  if (std::adjacent_find(deg_.begin(), deg_.end(), std::not_equal_to<>()) != deg_.end())
    return std::nullopt;
  return deg_.front();
}

std::vector<int> Multigraph::components() const {
  std::vector<int> comp(static_cast<std::size_t>(n_), -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n_; ++v) {
        if (m_[idx(u, v)] > 0 && comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool Multigraph::is_connected() const {
  const auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Multigraph Multigraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation has wrong length");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (int p : perm) {
    if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)])
      throw GraphError("not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  Multigraph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      g.m_[g.idx(u, v)] = m_[idx(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])];
  g.refresh_degrees();
  return g;
}

MultigraphBuilder::MultigraphBuilder(int n) : n_(n) {
  if (n < 1) throw GraphError("multigraph needs at least one vertex");
  m_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

MultigraphBuilder::MultigraphBuilder(const Multigraph& g)
    : n_(g.order()), m_(g.matrix().begin(), g.matrix().end()) {}

MultigraphBuilder& MultigraphBuilder::add_edge(int u, int v, int multiplicity) {
  return set_mult(u, v, mult(u, v) + multiplicity);
}

MultigraphBuilder& MultigraphBuilder::set_mult(int u, int v, int multiplicity) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("vertex out of range");
  if (u == v) throw GraphError("loops are not allowed");
  if (multiplicity < 0) throw GraphError("negative multiplicity");
  m_[static_cast<std::size_t>(u) * n_ + v] = multiplicity;
  m_[static_cast<std::size_t>(v) * n_ + u] = multiplicity;
  return *this;
}

std::int32_t MultigraphBuilder::mult(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("vertex out of range");
  return m_[static_cast<std::size_t>(u) * n_ + v];
}

Multigraph MultigraphBuilder::build() const { return Multigraph::from_matrix(n_, m_); }

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), owner_(static_cast<std::size_t>(n), -1) {
  if (n < 1) throw GraphError("partition of an empty vertex set");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw GraphError("partition has an empty block");
    for (int v : blocks_[b]) {
      if (v < 0 || v >= n) throw GraphError("partition vertex out of range");
      if (owner_[static_cast<std::size_t>(v)] >= 0)
        throw GraphError("partition blocks overlap at vertex " + std::to_string(v));
      owner_[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (owner_[static_cast<std::size_t>(v)] < 0)
      throw GraphError("partition does not cover vertex " + std::to_string(v));
}

Partition Partition::single_block(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return Partition(n, {all});
}

Partition Partition::discrete(int n) {
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < n; ++v) blocks.push_back({v});
  return Partition(n, std::move(blocks));
}

std::vector<int> degree_sequence(const Multigraph& g) {
  std::vector<int> d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool is_regular(const Multigraph& g, int d) {
  const auto r = g.regular_degree();
  return r && *r == d;
}

Multigraph underlying_simple_graph(const Multigraph& g) {
  std::vector<std::int32_t> m(g.matrix().begin(), g.matrix().end());
  for (auto& a : m) a = a > 0 ? 1 : 0;
  return Multigraph::from_matrix(g.order(), std::move(m));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  MultigraphBuilder out(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.mult(u, v)) out.set_mult(u, v, a.mult(u, v));
  const int off = a.order();
  for (int u = 0; u < b.order(); ++u)
    for (int v = u + 1; v < b.order(); ++v)
      if (b.mult(u, v)) out.set_mult(off + u, off + v, b.mult(u, v));
  return out.build();
}

bool underlying_is_complete(const Multigraph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.mult(u, v) == 0) return false;
  return true;
}

}  // namespace regcert
