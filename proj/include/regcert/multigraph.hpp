#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace regcert {

/// Raised when a constructor or operation is handed a graph, partition or
/// parameter set that violates its contract.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Loopless undirected multigraph stored as a dense symmetric multiplicity
/// matrix. Immutable once built; use MultigraphBuilder to assemble one.
class Multigraph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Multigraph(int n = 1);

  /// Validates symmetry, zero diagonal and non-negativity of a row-major
  /// n x n matrix.
  static Multigraph from_matrix(int n, std::vector<std::int32_t> entries);
  static Multigraph from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  std::int32_t mult(int u, int v) const { return m_[idx(u, v)]; }
  std::span<const std::int32_t> row(int u) const {
    return {m_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const std::int32_t> matrix() const { return m_; }

  int degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const { return deg_; }
  int min_degree() const;
  int max_degree() const;
  /// Number of edges counted with multiplicity.
  long long size() const;
  int max_multiplicity() const;

  bool is_simple() const { return max_multiplicity() <= 1; }
  bool is_regular() const { return regular_degree().has_value(); }
  std::optional<int> regular_degree() const;
  bool is_connected() const;
  /// Component index per vertex, numbered in order of first vertex.
  std::vector<int> components() const;

  /// Vertex v of the result is vertex perm[v] of this graph.
  Multigraph relabeled(std::span<const int> perm) const;

  /// Recomputes every invariant from scratch; throws GraphError on failure.
  void check_invariants() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  friend class MultigraphBuilder;
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void refresh_degrees();

  int n_ = 1;
  std::vector<std::int32_t> m_;
  std::vector<int> deg_;
};

/// Mutable staging area for building a Multigraph edge by edge.
class MultigraphBuilder {
 public:
  explicit MultigraphBuilder(int n);
  explicit MultigraphBuilder(const Multigraph& g);

  int order() const { return n_; }
  MultigraphBuilder& add_edge(int u, int v, int multiplicity = 1);
  MultigraphBuilder& set_mult(int u, int v, int multiplicity);
  std::int32_t mult(int u, int v) const;
  Multigraph build() const;

 private:
  int n_;
  std::vector<std::int32_t> m_;
};

/// A partition of {0, ..., n-1} into non-empty, pairwise disjoint blocks.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks);

  int order() const { return n_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int v) const { return owner_[static_cast<std::size_t>(v)]; }

  static Partition single_block(int n);
  static Partition discrete(int n);

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> owner_;
};

/// Vertex degrees sorted in descending order.
std::vector<int> degree_sequence(const Multigraph& g);

bool is_regular(const Multigraph& g, int d);

/// Replaces every positive multiplicity by 1.
Multigraph underlying_simple_graph(const Multigraph& g);

/// Vertices of b are shifted by a.order().
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// True iff the underlying simple graph is complete.
bool underlying_is_complete(const Multigraph& g);

}  // namespace regcert
