#pragma once

#include <cstdint>
#include <stdexcept>

#include "regcert/multigraph.hpp"

namespace regcert {

/// Thrown by random_regular_multigraph when the rejection sampler gives up.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSamplingBudget = 10'000;

/// Configuration-model sample of a loopless d-regular multigraph on n
/// vertices with every multiplicity <= max_mult. Stubs are paired by a
/// uniform shuffle; samples with a loop or an over-full entry are rejected.
/// Deterministic for a given seed.
Multigraph random_regular_multigraph(int n, int d, int max_mult, std::uint64_t seed,
                                     int budget = kDefaultSamplingBudget);

/// Independent pairs: each u < v gets an edge with probability edge_prob and
/// then a multiplicity uniform in [1, max_mult]. Deterministic per seed.
Multigraph random_multigraph(int n, double edge_prob, int max_mult, std::uint64_t seed);

/// Uniformly random partition of {0..n-1} into exactly `blocks` non-empty
/// blocks (not uniform over partitions). Deterministic per seed.
Partition random_partition(int n, int blocks, std::uint64_t seed);

/// The 5-vertex, (4k)-regular multigraph with a cut-vertex in the middle:
/// two pairs joined by 3k parallel edges, every outer vertex joined to the
/// centre by k parallel edges. Meets the order-dependent kappa >= 2 bound
/// with equality.
Multigraph extremal_5vertex(int k);

/// The 6-vertex d-regular multigraph (d odd) with a single cut-edge: blocks
/// {a, b, v1} and {c, d, v2}, a-b of multiplicity (d+1)/2, a-v1 and b-v1 of
/// multiplicity (d-1)/2, v1-v2 a single edge, mirrored on the other side.
/// Vertex order: a, b, v1, v2, c, d.
Multigraph extremal_6vertex(int d);

Multigraph complete_graph(int n);
Multigraph cycle_graph(int n);
Multigraph path_graph(int n);
Multigraph star_graph(int n);
Multigraph petersen_graph();

}  // namespace regcert
