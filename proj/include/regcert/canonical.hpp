#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "regcert/multigraph.hpp"

namespace regcert {

/// Isomorphism-invariant identifier: two multigraphs have equal keys iff they
/// are isomorphic. The byte layout is the order followed by the upper
/// triangle of the canonically relabeled matrix (LEB128 per entry).
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  /// Compact filename-safe text form, e.g. "n10w2-3f0c...". Entries are
  /// packed at the smallest width in {2, 4, 8, 16, 32} bits that holds the
  /// largest multiplicity.
  std::string text() const;

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalForm {
  CanonicalKey key;
  /// position[v] is the canonical index of vertex v.
  std::vector<int> position;
  /// Search-tree leaves visited; a rough cost measure.
  long leaves = 0;
};

CanonicalForm canonical_form(const Multigraph& g);
CanonicalKey canonical_key(const Multigraph& g);
/// The canonical representative: vertex position[v] of the result is v.
Multigraph canonical_graph(const Multigraph& g);

}  // namespace regcert
