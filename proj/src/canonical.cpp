// Canonical labeling by colour refinement on the multiplicity matrix,
// individualization of the first non-singleton cell, and pruning of
// subtrees equivalent under automorphisms discovered at the leaves.

#include "regcert/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace regcert {
namespace {

using Coloring = std::vector<int>;  // vertex -> cell rank

void put_leb128(std::vector<std::uint8_t>& out, std::uint32_t v) {
  do {
    std::uint8_t b = v & 0x7f;
    v >>= 7;
    if (v) b |= 0x80;
    out.push_back(b);
  } while (v);
}

class Canonizer {
 public:
  explicit Canonizer(const Multigraph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Coloring start(static_cast<std::size_t>(n_), 0);
    // Degree is a valid first invariant; refinement would find it anyway.
    rerank(start, [&](int v) { return g_.degree(v); });
    std::vector<int> path;
    search(start, path);
    CanonicalForm out;
    out.key = best_key_;
    out.position = best_pos_;
    out.leaves = leaves_;
    return out;
  }

 private:
  template <class KeyFn>
  static int rerank(Coloring& c, KeyFn key) {
    const int n = static_cast<int>(c.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<long long> k(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) k[static_cast<std::size_t>(v)] = key(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return k[static_cast<std::size_t>(a)] < k[static_cast<std::size_t>(b)];
    });
    int rank = -1;
    long long prev = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const long long kv = k[static_cast<std::size_t>(order[i])];
      if (i == 0 || kv != prev) ++rank;
      prev = kv;
      c[static_cast<std::size_t>(order[i])] = rank;
    }
    return rank + 1;
  }

  static int cell_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  // Splits cells until every vertex of a cell sees the same multiset of
  // (neighbour cell, multiplicity) pairs.
  void refine(Coloring& c) const {
    int cells = cell_count(c);
    std::vector<std::vector<long long>> sig(static_cast<std::size_t>(n_));
    std::vector<int> order(static_cast<std::size_t>(n_));
    const long long base = static_cast<long long>(g_.max_multiplicity()) + 1;
    while (cells < n_) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[static_cast<std::size_t>(v)];
        s.clear();
        s.push_back(c[static_cast<std::size_t>(v)]);
        for (int w = 0; w < n_; ++w) {
          const int m = g_.mult(v, w);
          if (m > 0) s.push_back(c[static_cast<std::size_t>(w)] * base + m);
        }
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
      int rank = -1;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) ++rank;
        c[static_cast<std::size_t>(order[i])] = rank;
      }
      if (rank + 1 == cells) break;
      cells = rank + 1;
    }
  }

  CanonicalKey leaf_key(const std::vector<int>& pos) const {
    std::vector<int> at(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) at[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = v;
    CanonicalKey k;
    k.bytes.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 3);
    put_leb128(k.bytes, static_cast<std::uint32_t>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        put_leb128(k.bytes, static_cast<std::uint32_t>(g_.mult(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)])));
    return k;
  }

  void record_automorphism(const std::vector<int>& pos, const std::vector<int>& other_pos) {
    std::vector<int> at_other(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) at_other[static_cast<std::size_t>(other_pos[static_cast<std::size_t>(v)])] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = at_other[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
      identity = identity && gamma[static_cast<std::size_t>(v)] == v;
    }
    if (!identity) autos_.push_back(std::move(gamma));
  }

  void leaf(const Coloring& c) {
    ++leaves_;
    CanonicalKey k = leaf_key(c);
    if (!have_best_) {
      have_best_ = true;
      best_key_ = k;
      best_pos_ = c;
      first_key_ = std::move(k);
      first_pos_ = c;
      return;
    }
    if (k == first_key_) record_automorphism(c, first_pos_);
    const auto cmp = k <=> best_key_;
    if (cmp == 0) {
      record_automorphism(c, best_pos_);
    } else if (cmp > 0) {
      best_key_ = std::move(k);
      best_pos_ = c;
    }
  }

  int find(std::vector<int>& uf, int x) const {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  }

  // Orbits of the group generated by the known automorphisms that fix every
  // vertex of `path`.
  std::vector<int> stabilizer_orbits(const std::vector<int>& path) const {
    std::vector<int> uf(static_cast<std::size_t>(n_));
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (int p : path)
        if (gamma[static_cast<std::size_t>(p)] != p) { fixes = false; break; }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(uf, v);
        int b = find(uf, gamma[static_cast<std::size_t>(v)]);
        if (a != b) uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) uf[static_cast<std::size_t>(v)] = find(uf, v);
    return uf;
  }

  void search(Coloring c, std::vector<int>& path) {
    refine(c);
    const int cells = cell_count(c);
    if (cells == n_) {
      leaf(c);
      return;
    }
    // Target: the lowest-ranked non-singleton cell.
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int v = 0; v < n_; ++v) ++size[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;

    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (c[static_cast<std::size_t>(v)] != target) continue;
      if (!explored.empty() && !autos_.empty()) {
        const auto orbit = stabilizer_orbits(path);
        const bool seen = std::any_of(explored.begin(), explored.end(), [&](int u) {
          return orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)];
        });
        if (seen) continue;
      }
      Coloring child = c;
      rerank(child, [&](int w) {
        return 2LL * c[static_cast<std::size_t>(w)] + (w == v ? 0 : 1);
      });
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  const Multigraph& g_;
  int n_;
  bool have_best_ = false;
  CanonicalKey best_key_, first_key_;
  std::vector<int> best_pos_, first_pos_;
  std::vector<std::vector<int>> autos_;
  long leaves_ = 0;
};

}  // namespace

std::string CanonicalKey::text() const {
  // Decode the LEB128 stream back into numbers.
  std::vector<std::uint32_t> vals;
  std::uint32_t cur = 0;
  int shift = 0;
  for (std::uint8_t b : bytes) {
    cur |= static_cast<std::uint32_t>(b & 0x7f) << shift;
    if (b & 0x80) {
      shift += 7;
    } else {
      vals.push_back(cur);
      cur = 0;
      shift = 0;
    }
  }
  if (vals.empty()) return "empty";
  const std::uint32_t n = vals.front();
  std::uint32_t maxv = 0;
  for (std::size_t i = 1; i < vals.size(); ++i) maxv = std::max(maxv, vals[i]);
  int width = 2;
  while (width < 32 && (maxv >> width) != 0) width *= 2;

  std::string out = "n" + std::to_string(n) + "w" + std::to_string(width) + "-";
  static constexpr char hexd[] = "0123456789abcdef";
  unsigned acc = 0;
  int bits = 0;
  auto flush_nibble = [&](unsigned nib) { out += hexd[nib & 0xf]; };
  for (std::size_t i = 1; i < vals.size(); ++i) {
    for (int b = width - 1; b >= 0; --b) {
      acc = (acc << 1) | ((vals[i] >> b) & 1u);
      if (++bits == 4) {
        flush_nibble(acc);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits) flush_nibble(acc << (4 - bits));
  return out;
}

CanonicalForm canonical_form(const Multigraph& g) { return Canonizer(g).run(); }

CanonicalKey canonical_key(const Multigraph& g) { return canonical_form(g).key; }

Multigraph canonical_graph(const Multigraph& g) {
  const auto form = canonical_form(g);
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) perm[static_cast<std::size_t>(form.position[static_cast<std::size_t>(v)])] = v;
  return g.relabeled(perm);
}

}  // namespace regcert
