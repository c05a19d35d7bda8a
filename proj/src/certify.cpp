#include <algorithm>
#include <cmath>

#include "regcert/bounds.hpp"
#include "regcert/connectivity.hpp"
#include "regcert/spectral.hpp"

namespace regcert {

bool Certificate::sound() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const RuleOutcome& o) { return o.holds; });
}

std::vector<RuleOutcome> Certificate::fired() const {
  std::vector<RuleOutcome> out;
  for (const auto& o : outcomes)
    if (o.fired) out.push_back(o);
  return out;
}

namespace {

int best_guarantee(const Certificate& c, Conclusion which) {
  int best = 0;
  for (const auto& o : c.outcomes)
    if (o.fired && o.conclusion == which) best = std::max(best, o.guarantee);
  return best;
}

}  // namespace

int Certificate::best_kappa_guarantee() const { return best_guarantee(*this, Conclusion::vertex); }
int Certificate::best_kappa_prime_guarantee() const { return best_guarantee(*this, Conclusion::edge); }

Certificate certify(const Multigraph& g, const CertifyOptions& opts) {
  if (g.order() < 2) throw GraphError("certify needs at least two vertices");
  const double tol = opts.tolerance;

  Certificate c;
  c.n = g.order();
  c.d = g.regular_degree();
  c.simple = g.is_simple();
  c.connected = g.is_connected();
  c.lambda2 = lambda2(g);
  c.mu2 = mu2(g);
  c.kappa = vertex_connectivity(g);
  c.kappa_prime = edge_connectivity(g);
  const bool complete = underlying_is_complete(g);

  auto finish = [&](RuleOutcome& o, double value) {
    switch (o.comparison) {
      case Comparison::lambda2_less: o.fired = value < o.threshold - tol; break;
      case Comparison::lambda2_less_equal: o.fired = value <= o.threshold + tol; break;
      case Comparison::mu2_greater: o.fired = value > o.threshold + tol; break;
    }
    o.tight = std::abs(value - o.threshold) <= tol;
    const int exact = o.conclusion == Conclusion::vertex ? c.kappa : c.kappa_prime;
    o.holds = !o.fired || o.guarantee <= exact;
    c.outcomes.push_back(o);
  };

  // Fiedler: one row at the largest t with mu2 > t.
  if (!c.simple) {
    c.skipped.push_back({RuleId::fiedler, 0, "stated for simple graphs only"});
  } else if (complete) {
    c.skipped.push_back({RuleId::fiedler, 0, "stated for non-complete graphs only"});
  } else {
    const int t = std::max(0, static_cast<int>(std::ceil(c.mu2 - tol)) - 1);
    RuleOutcome o;
    o.id = RuleId::fiedler;
    o.t = t;
    o.graph_class = GraphClass::simple;
    o.threshold = t;
    o.comparison = Comparison::mu2_greater;
    o.conclusion = Conclusion::vertex;
    o.guarantee = t + 1;
    finish(o, c.mu2);
  }

  if (!c.d) {
    for (RuleId id : kAllRules)
      if (id != RuleId::fiedler) c.skipped.push_back({id, 0, "input is not regular"});
    return c;
  }
  const int d = *c.d;

  std::vector<int> ts;
  if (opts.t)
    ts.push_back(*opts.t);
  else
    for (int t = 1; t <= d - 1; ++t) ts.push_back(t);

  for (RuleId id : kAllRules) {
    if (id == RuleId::fiedler) continue;
    const RuleTraits tr = rule_traits(id);
    if (tr.simple_only && !c.simple) {
      c.skipped.push_back({id, 0, "stated for simple graphs only"});
      continue;
    }
    if ((id == RuleId::o_mult_1 || id == RuleId::o_mult_t) && !c.connected) {
      c.skipped.push_back({id, 0, "needs a connected graph"});
      continue;
    }
    if (id == RuleId::o_vertex && c.n == 2) {
      c.skipped.push_back({id, 0, "excluded: the 2-vertex d-regular multigraph"});
      continue;
    }

    std::vector<GraphClass> classes{c.simple ? GraphClass::simple : GraphClass::multigraph};
    // A simple graph is also a multigraph; thm31 has a separate bound for each.
    if (id == RuleId::thm31 && c.simple) classes.push_back(GraphClass::multigraph);

    const std::vector<int> rule_ts = tr.uses_t ? ts : std::vector<int>{0};
    for (GraphClass cls : classes) {
      for (int t : rule_ts) {
        BoundRule rule{id, d, c.n, tr.uses_t ? t : 1, cls};
        if ((id == RuleId::thm31 || id == RuleId::thm41) && complete && c.n <= t + 1) {
          c.skipped.push_back({id, t, "excluded: duplicated complete graph on at most t+1 vertices"});
          continue;
        }
        if (auto why = rule_inapplicable(rule)) {
          c.skipped.push_back({id, t, *why});
          continue;
        }
        RuleOutcome o;
        o.id = id;
        o.t = t;
        o.graph_class = cls;
        o.threshold = evaluate_bound(rule);
        o.comparison = tr.comparison;
        o.conclusion = tr.conclusion;
        o.guarantee = rule_guarantee(rule);
        finish(o, c.lambda2);
      }
    }
  }
  return c;
}

}  // namespace regcert
