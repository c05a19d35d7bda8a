#include "regcert/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>

#include "regcert/bounds.hpp"
#include "regcert/mg_format.hpp"
#include "regcert/spectral.hpp"

namespace regcert {

bool is_graphical(std::span<const int> degrees) {
  std::vector<long long> d(degrees.begin(), degrees.end());
  std::sort(d.rbegin(), d.rend());
  if (!d.empty() && d.back() < 0) return false;
  if (std::accumulate(d.begin(), d.end(), 0LL) % 2 != 0) return false;
  const long long n = static_cast<long long>(d.size());
  long long left = 0;
  for (long long k = 1; k <= n; ++k) {
    left += d[static_cast<std::size_t>(k - 1)];
    long long right = k * (k - 1);
    for (long long i = k; i < n; ++i) right += std::min(d[static_cast<std::size_t>(i)], k);
    if (left > right) return false;
  }
  return true;
}

namespace {

// Row-by-row labeled search. Later vertices that have identical columns in
// the finished rows and the same target degree are interchangeable, so
// their entries in the current row are forced to be non-increasing.
class RowSearch {
 public:
  RowSearch(std::vector<int> target, int max_mult)
      : n_(static_cast<int>(target.size())),
        max_mult_(max_mult),
        target_(std::move(target)),
        rem_(target_),
        m_(static_cast<std::size_t>(n_) * n_, 0),
        prev_(static_cast<std::size_t>(n_), -1) {}

  std::vector<Multigraph> run() {
    row(0);
    std::vector<Multigraph> out;
    out.reserve(found_.size());
    for (auto& [key, g] : found_) out.push_back(std::move(g));
    return out;
  }

 private:
  int& at(int i, int j) { return m_[static_cast<std::size_t>(i) * n_ + j]; }
  int rem(int v) const { return rem_[static_cast<std::size_t>(v)]; }

  void row(int i) {
    if (i == n_) {
      emit();
      return;
    }
    if (rem(i) == 0 && i == n_ - 1) {
      row(i + 1);
      return;
    }
    // Chain each later vertex to the nearest earlier one in its class.
    std::vector<int> saved(prev_.begin(), prev_.end());
    for (int j = i + 1; j < n_; ++j) {
      prev_[static_cast<std::size_t>(j)] = -1;
      for (int k = j - 1; k > i; --k) {
        if (target_[static_cast<std::size_t>(k)] != target_[static_cast<std::size_t>(j)]) continue;
        bool same = true;
        for (int r = 0; r < i && same; ++r) same = at(r, k) == at(r, j);
        if (same) {
          prev_[static_cast<std::size_t>(j)] = k;
          break;
        }
      }
    }
    fill(i, i + 1, rem(i));
    prev_ = std::move(saved);
  }

  void fill(int i, int j, int need) {
    if (j == n_) {
      if (need == 0 && later_feasible(i)) row(i + 1);
      return;
    }
    int capacity = 0;
    for (int k = j; k < n_; ++k) capacity += std::min(rem(k), max_mult_);
    if (capacity < need) return;
    int hi = std::min({max_mult_, need, rem(j)});
    const int p = prev_[static_cast<std::size_t>(j)];
    if (p >= 0) hi = std::min(hi, at(i, p));
    for (int v = hi; v >= 0; --v) {
      at(i, j) = at(j, i) = v;
      rem_[static_cast<std::size_t>(j)] -= v;
      fill(i, j + 1, need - v);
      rem_[static_cast<std::size_t>(j)] += v;
    }
    at(i, j) = at(j, i) = 0;
  }

  bool later_feasible(int i) const {
    const int others = n_ - i - 2;
    int sum = 0;
    for (int k = i + 1; k < n_; ++k) {
      if (rem(k) > max_mult_ * others) return false;
      sum += rem(k);
    }
    return sum % 2 == 0;
  }

  void emit() {
    std::vector<std::int32_t> mat(m_.begin(), m_.end());
    Multigraph g = Multigraph::from_matrix(n_, std::move(mat));
    auto key = canonical_key(g);
    if (!found_.count(key)) found_.emplace(std::move(key), canonical_graph(g));
  }

  int n_;
  int max_mult_;
  std::vector<int> target_;
  std::vector<int> rem_;
  std::vector<int> m_;
  std::vector<int> prev_;
  std::map<CanonicalKey, Multigraph> found_;
};

std::vector<Multigraph> sorted_unique(std::map<CanonicalKey, Multigraph>& by_key) {
  std::vector<Multigraph> out;
  out.reserve(by_key.size());
  for (auto& [k, g] : by_key) out.push_back(std::move(g));
  return out;
}

void require_j(int j) {
  if (j != 5 && j != 7 && j != 9 && j != 11) throw EnumerationError("j must be one of 5, 7, 9, 11");
}

void require_i(int i) {
  if (i != 10 && i != 12 && i != 14 && i != 16 && i != 18)
    throw EnumerationError("i must be one of 10, 12, 14, 16, 18");
}

}  // namespace

std::vector<Multigraph> gen_multigraphs(std::vector<int> degrees, int max_mult) {
  if (degrees.empty()) throw EnumerationError("empty degree sequence");
  if (max_mult < 1) throw EnumerationError("max_mult must be >= 1");
  for (int d : degrees)
    if (d < 0) throw EnumerationError("negative degree");
  std::sort(degrees.rbegin(), degrees.rend());
  if (std::accumulate(degrees.begin(), degrees.end(), 0) % 2 != 0) return {};
  return RowSearch(std::move(degrees), max_mult).run();
}

std::vector<Multigraph> gen_simple_graphs(std::vector<int> degrees) {
  if (!is_graphical(degrees)) throw EnumerationError("degree sequence is not graphical");
  return gen_multigraphs(std::move(degrees), 1);
}

std::vector<int> s_degree_sequence(int l, int j) {
  if (l < 0 || 2 * l + 1 > j) throw EnumerationError("need 0 <= l <= (j-1)/2");
  std::vector<int> seq(static_cast<std::size_t>(j - 2 * l - 1), 3);
  seq.insert(seq.end(), static_cast<std::size_t>(2 * l + 1), 2);
  return seq;
}

int DegreeTwoProfile::odd_paths() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(), [](const FComponent& c) { return c.odd_path(); }));
}

int DegreeTwoProfile::cycles() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(), [](const FComponent& c) { return c.cycle; }));
}

std::string_view verdict_reason(FVerdict v) {
  switch (v) {
    case FVerdict::keep: return "keep";
    case FVerdict::reject_short_cycle: return "f(H) contains a cycle shorter than |V(H)|";
    case FVerdict::reject_multiple_odd_paths: return "f(H) contains more than one odd path";
    case FVerdict::reject_no_odd_path: return "f(H) contains no odd path";
  }
  return "?";
}

FClassification classify_f(const Multigraph& h) {
  if (!h.is_simple()) throw EnumerationError("classify_f needs a simple graph");
  const int n = h.order();
  std::vector<char> in_f(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) in_f[static_cast<std::size_t>(v)] = h.degree(v) == 2;
  auto f_neighbors = [&](int v) {
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
      if (in_f[static_cast<std::size_t>(u)] && h.mult(u, v) > 0) out.push_back(u);
    return out;
  };

  FClassification c;
  c.profile.graph_order = n;
  std::vector<char> seen(static_cast<std::size_t>(n));
  auto walk = [&](int start, bool cycle) {
    FComponent comp;
    comp.cycle = cycle;
    int prev = -1, v = start;
    while (v >= 0 && !seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      comp.vertices.push_back(v);
      int next = -1;
      for (int u : f_neighbors(v))
        if (u != prev && !seen[static_cast<std::size_t>(u)]) {
          next = u;
          break;
        }
      prev = v;
      v = next;
    }
    c.profile.components.push_back(std::move(comp));
  };
  // Paths first, started from an endpoint; what remains are cycles.
  for (int v = 0; v < n; ++v)
    if (in_f[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)] && f_neighbors(v).size() <= 1)
      walk(v, false);
  for (int v = 0; v < n; ++v)
    if (in_f[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) walk(v, true);

  const auto& comps = c.profile.components;
  if (c.profile.cycles() > 0) {
    const bool spanning = comps.size() == 1 && comps[0].order() == n;
    c.verdict = spanning ? FVerdict::keep : FVerdict::reject_short_cycle;
  } else if (c.profile.odd_paths() > 1) {
    c.verdict = FVerdict::reject_multiple_odd_paths;
  } else if (c.profile.odd_paths() == 0) {
    c.verdict = FVerdict::reject_no_odd_path;
  } else {
    c.verdict = FVerdict::keep;
  }
  return c;
}

namespace {

Edge make_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Perfect matching of consecutive pairs of seq[from .. from+len).
void match_run(const std::vector<int>& seq, int from, int len, Matching& m) {
  for (int k = 0; k + 1 < len; k += 2)
    m.push_back(make_edge(seq[static_cast<std::size_t>(from + k)], seq[static_cast<std::size_t>(from + k + 1)]));
}

std::vector<Matching> component_matchings(const FComponent& c) {
  const int k = c.order();
  const auto& v = c.vertices;
  std::vector<Matching> out;
  if (!c.cycle) {
    if (k % 2 == 0) {
      Matching m;
      match_run(v, 0, k, m);
      out.push_back(std::move(m));
    } else {
      // Leave out one vertex at an even position.
      for (int s = 0; s < k; s += 2) {
        Matching m;
        match_run(v, 0, s, m);
        match_run(v, s + 1, k - s - 1, m);
        out.push_back(std::move(m));
      }
    }
    return out;
  }
  if (k % 2 == 0) {
    for (int shift = 0; shift < 2; ++shift) {
      Matching m;
      for (int a = shift; a < k; a += 2) m.push_back(make_edge(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>((a + 1) % k)]));
      out.push_back(std::move(m));
    }
  } else {
    for (int s = 0; s < k; ++s) {
      std::vector<int> rest;
      for (int a = 1; a < k; ++a) rest.push_back(v[static_cast<std::size_t>((s + a) % k)]);
      Matching m;
      match_run(rest, 0, k - 1, m);
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace

std::vector<Matching> max_matchings_of_f(const DegreeTwoProfile& profile) {
  std::vector<Matching> result{Matching{}};
  for (const auto& comp : profile.components) {
    const auto options = component_matchings(comp);
    std::vector<Matching> next;
    for (const auto& base : result)
      for (const auto& add : options) {
        Matching m = base;
        m.insert(m.end(), add.begin(), add.end());
        next.push_back(std::move(m));
      }
    result = std::move(next);
  }
  for (auto& m : result) std::sort(m.begin(), m.end());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Multigraph> lift_to_M(const Multigraph& h, const std::vector<Matching>& matchings) {
  std::map<CanonicalKey, Multigraph> by_key;
  for (const auto& m : matchings) {
    MultigraphBuilder b(h);
    for (const auto& [u, v] : m) {
      if (h.mult(u, v) != 1 || h.degree(u) != 2 || h.degree(v) != 2)
        throw EnumerationError("matching edge is not a single edge between degree-2 vertices");
      b.set_mult(u, v, 2);
    }
    Multigraph g = b.build();
    auto key = canonical_key(g);
    if (!by_key.count(key)) by_key.emplace(std::move(key), canonical_graph(g));
  }
  return sorted_unique(by_key);
}

bool is_two_vertex_connected(const Multigraph& g) { return g.order() >= 3 && vertex_connectivity(g) >= 2; }

std::vector<Multigraph> build_S(int l, int j) {
  require_j(j);
  return gen_simple_graphs(s_degree_sequence(l, j));
}

namespace {

void check_b_member(int l, int j, const Multigraph& g) {
  auto fail = [&](const char* why) {
    throw std::logic_error("M(" + std::to_string(l) + "," + std::to_string(j) + ") member " + why + ":\n" + serialize_mg(g));
  };
  if (g.order() != j) fail("has the wrong order");
  const auto seq = degree_sequence(g);
  for (int k = 0; k < j - 1; ++k)
    if (seq[static_cast<std::size_t>(k)] != 3) fail("has the wrong degree sequence");
  if (seq.back() != 2) fail("has the wrong degree sequence");
  if (g.max_multiplicity() > 2) fail("has a triple edge");
  if (!g.is_connected()) fail("is disconnected");
  if (!cut_edges(g).empty()) fail("has a cut-edge");
  int doubles = 0;
  for (int u = 0; u < j; ++u)
    for (int v = u + 1; v < j; ++v) doubles += g.mult(u, v) == 2;
  if (doubles != l) fail("has the wrong number of double edges");
}

}  // namespace

std::vector<Multigraph> build_M(int l, int j) {
  std::map<CanonicalKey, Multigraph> by_key;
  for (const auto& h : build_S(l, j)) {
    if (!is_two_vertex_connected(h)) continue;
    const auto c = classify_f(h);
    if (c.verdict != FVerdict::keep) continue;
    for (auto& g : lift_to_M(h, max_matchings_of_f(c.profile))) {
      check_b_member(l, j, g);
      by_key.emplace(canonical_key(g), std::move(g));
    }
  }
  return sorted_unique(by_key);
}

std::vector<Multigraph> build_B(int j) {
  require_j(j);
  std::map<CanonicalKey, Multigraph> by_key;
  for (int l = 0; 2 * l + 1 <= j; ++l)
    for (auto& g : build_M(l, j)) {
      auto key = canonical_key(g);
      if (by_key.count(key)) throw std::logic_error("M(l,j) families overlap");
      by_key.emplace(std::move(key), std::move(g));
    }
  return sorted_unique(by_key);
}

std::string_view gadget_name(Gadget g) {
  switch (g) {
    case Gadget::J2: return "J2";
    case Gadget::J4: return "J4";
    case Gadget::J4_prime: return "J4p";
    case Gadget::J4_double: return "J4d";
  }
  return "?";
}

Multigraph gadget_graph(Gadget g) {
  switch (g) {
    case Gadget::J2: return Multigraph::from_rows({{0, 2}, {2, 0}});
    case Gadget::J4: return Multigraph::from_rows({{0, 2, 0, 0}, {2, 0, 1, 0}, {0, 1, 0, 2}, {0, 0, 2, 0}});
    case Gadget::J4_prime: return Multigraph::from_rows({{0, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 0}});
    case Gadget::J4_double: return Multigraph::from_rows({{0, 1, 0, 1}, {1, 0, 2, 0}, {0, 2, 0, 1}, {1, 0, 1, 0}});
  }
  throw EnumerationError("unknown gadget");
}

std::pair<int, int> gadget_ports(Gadget g) { return g == Gadget::J2 ? std::pair{0, 1} : std::pair{0, 3}; }

int degree_two_vertex(const Multigraph& g) {
  int found = -1;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 2) {
      if (found >= 0) throw EnumerationError("more than one degree-2 vertex");
      found = v;
    }
  if (found < 0) throw EnumerationError("no degree-2 vertex");
  return found;
}

Multigraph join(const Multigraph& left, const Multigraph& right, std::optional<Gadget> bridge) {
  const int a = degree_two_vertex(left);
  const int b = degree_two_vertex(right);
  if (!bridge) {
    MultigraphBuilder u(disjoint_union(left, right));
    u.add_edge(a, left.order() + b);
    return u.build();
  }
  const Multigraph j = gadget_graph(*bridge);
  const auto [p, q] = gadget_ports(*bridge);
  MultigraphBuilder u(disjoint_union(disjoint_union(left, j), right));
  u.add_edge(a, left.order() + p);
  u.add_edge(left.order() + q, left.order() + j.order() + b);
  return u.build();
}

std::vector<FamilyTerm> family_terms(int i, const AssemblyOptions& opts) {
  require_i(i);
  switch (i) {
    case 10: return {{5, 5, {}}};
    case 12: return {{5, 7, {}}, {5, 5, Gadget::J2}};
    case 14: return {{7, 7, {}}};
    case 16: return {{7, 9, {}}, {7, 7, Gadget::J2}};
    default: {
      std::vector<FamilyTerm> t{{7, 11, {}}, {9, 9, {}}, {7, 9, Gadget::J2}, {7, 7, Gadget::J4}, {7, 7, Gadget::J4_prime}};
      if (opts.include_extra_gadget) t.push_back({7, 7, Gadget::J4_double});
      return t;
    }
  }
}

std::string family_term_name(const FamilyTerm& t) {
  std::string s = "B" + std::to_string(t.left_j);
  if (t.bridge) s += "-" + std::string(gadget_name(*t.bridge));
  return s + "-B" + std::to_string(t.right_j);
}

const std::vector<Multigraph>& FamilyBuilder::B(int j) {
  auto it = b_.find(j);
  if (it == b_.end()) it = b_.emplace(j, build_B(j)).first;
  return it->second;
}

std::vector<Multigraph> FamilyBuilder::term(const FamilyTerm& t) {
  const auto& L = B(t.left_j);
  const auto& R = B(t.right_j);
  std::map<CanonicalKey, Multigraph> by_key;
  for (std::size_t x = 0; x < L.size(); ++x) {
    // Symmetric terms use unordered pairs; the gadgets are symmetric too.
    const std::size_t y0 = t.left_j == t.right_j ? x : 0;
    for (std::size_t y = y0; y < R.size(); ++y) {
      Multigraph g = join(L[x], R[y], t.bridge);
      auto key = canonical_key(g);
      if (!by_key.count(key)) by_key.emplace(std::move(key), canonical_graph(g));
    }
  }
  return sorted_unique(by_key);
}

std::vector<Multigraph> FamilyBuilder::A(int i, const AssemblyOptions& opts) {
  std::map<CanonicalKey, Multigraph> by_key;
  for (const auto& t : family_terms(i, opts))
    for (auto& g : term(t)) {
      if (auto why = family_predicate_violation(i, g))
        throw std::logic_error("A_" + std::to_string(i) + " member " + *why + ":\n" + serialize_mg(g));
      by_key.emplace(canonical_key(g), std::move(g));
    }
  return sorted_unique(by_key);
}

std::vector<Multigraph> build_A(int i, const AssemblyOptions& opts) {
  FamilyBuilder b;
  return b.A(i, opts);
}

std::optional<std::string> family_predicate_violation(int i, const Multigraph& g) {
  if (g.order() != i) return "has order " + std::to_string(g.order());
  if (!is_regular(g, 3)) return "is not 3-regular";
  if (edge_connectivity(g) != 1) return "does not have edge-connectivity 1";
  const int cuts = static_cast<int>(cut_edges(g).size());
  const int max_cuts = (i == 10 || i == 14) ? 1 : (i == 18 ? 3 : 2);
  if (cuts < 1 || cuts > max_cuts) return "has " + std::to_string(cuts) + " cut-edges";
  const int min_side = i <= 12 ? 5 : 7;
  if (min_sc_cut_edge(g)->sc < min_side) return "has a cut-edge with a component of order < " + std::to_string(min_side);
  return std::nullopt;
}

std::vector<FamilyMember> describe_members(const std::vector<Multigraph>& graphs) {
  std::vector<FamilyMember> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) {
    FamilyMember m{g, canonical_key(g), static_cast<int>(cut_edges(g).size()), lambda2(g)};
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const FamilyMember& a, const FamilyMember& b) { return a.key < b.key; });
  return out;
}

FamilyReport verify_members(int i, const std::vector<FamilyMember>& members, double tol) {
  require_i(i);
  if (members.empty()) throw EnumerationError("empty family");
  FamilyReport r;
  r.i = i;
  r.count = members.size();
  r.rho = rho(3, i);
  const auto it = std::min_element(members.begin(), members.end(),
                                   [](const FamilyMember& a, const FamilyMember& b) { return a.lambda2 < b.lambda2; });
  r.argmin = *it;
  r.min_lambda2 = it->lambda2;
  r.margin = r.min_lambda2 - r.rho;
  r.passed = r.min_lambda2 >= r.rho - tol;
  return r;
}

FamilyReport verify_family(int i, const AssemblyOptions& opts, double tol) {
  return verify_members(i, describe_members(build_A(i, opts)), tol);
}

std::string manifest_csv(std::string_view family, const std::vector<FamilyMember>& members) {
  std::string out = "family,key,n,num_cut_edges,lambda2\n";
  char buf[64];
  for (const auto& m : members) {
    std::snprintf(buf, sizeof buf, "%.9f", m.lambda2);
    out += std::string(family) + "," + m.key.text() + "," + std::to_string(m.graph.order()) + "," +
           std::to_string(m.cut_edges) + "," + buf + "\n";
  }
  return out;
}

void write_family(const std::filesystem::path& dir, std::string_view family, const std::vector<FamilyMember>& members) {
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir / "manifest.csv", std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write " + (dir / "manifest.csv").string());
  csv << manifest_csv(family, members);
  for (const auto& m : members) write_mg_file(dir / (m.key.text() + ".mg"), m.graph);
}

}  // namespace regcert
