// regcert: spectral connectivity certificates for regular multigraphs.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regcert/bounds.hpp"
#include "regcert/connectivity.hpp"
#include "regcert/enumerate.hpp"
#include "regcert/generators.hpp"
#include "regcert/mg_format.hpp"
#include "regcert/spectral.hpp"
#include "regcert/verify.hpp"

using namespace regcert;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- output ----

struct Real {
  double v;
};
using Cell = std::variant<std::monostate, long long, Real, bool, std::string>;

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s = buf;
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

std::string cell_text(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(Real x) const { return fixed9(x.v); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& x) const { return x; }
  };
  return std::visit(V{}, c);
}

ordered_json cell_json(const Cell& c) {
  struct V {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(long long x) const { return x; }
    // Shortest repr of the 9-decimal rounding.
    ordered_json operator()(Real x) const { return std::stod(fixed9(x.v)); }
    ordered_json operator()(bool x) const { return x; }
    ordered_json operator()(const std::string& x) const { return x; }
  };
  return std::visit(V{}, c);
}

Cell I(long long x) { return x; }
Cell R(double x) { return Real{x}; }
Cell S(std::string x) { return x; }
Cell B(bool x) { return x; }

struct Table {
  std::string name;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

struct Document {
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<Table> tables;
};

enum class Format { table, csv, json };

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render(const Document& doc, Format fmt, std::ostream& os) {
  if (fmt == Format::json) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : doc.summary) j[k] = cell_json(v);
    for (const auto& t : doc.tables) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : t.rows) {
        ordered_json o = ordered_json::object();
        for (std::size_t c = 0; c < t.headers.size(); ++c) o[t.headers[c]] = cell_json(r[c]);
        rows.push_back(std::move(o));
      }
      j[t.name] = std::move(rows);
    }
    os << j.dump(2) << '\n';
    return;
  }
  if (fmt == Format::csv) {
    bool first = true;
    if (!doc.summary.empty()) {
      os << "key,value\n";
      for (const auto& [k, v] : doc.summary) os << csv_field(k) << ',' << csv_field(cell_text(v)) << '\n';
      first = false;
    }
    for (const auto& t : doc.tables) {
      if (!first) os << '\n';
      first = false;
      for (std::size_t c = 0; c < t.headers.size(); ++c) os << (c ? "," : "") << csv_field(t.headers[c]);
      os << '\n';
      for (const auto& r : t.rows) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << csv_field(cell_text(r[c]));
        os << '\n';
      }
    }
    return;
  }
  std::size_t kw = 0;
  for (const auto& [k, v] : doc.summary) kw = std::max(kw, k.size());
  for (const auto& [k, v] : doc.summary) os << k << std::string(kw - k.size(), ' ') << "  " << cell_text(v) << '\n';
  for (const auto& t : doc.tables) {
    if (!doc.summary.empty() || &t != &doc.tables.front()) os << '\n';
    if (doc.tables.size() > 1) os << "[" << t.name << "]\n";
    std::vector<std::size_t> w(t.headers.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = t.headers[c].size();
    for (const auto& r : t.rows) {
      auto& line = text.emplace_back();
      for (std::size_t c = 0; c < r.size(); ++c) {
        line.push_back(cell_text(r[c]));
        w[c] = std::max(w[c], line.back().size());
      }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
      std::string out;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out += "  ";
        out += cells[c];
        if (c + 1 < cells.size()) out += std::string(w[c] - cells[c].size(), ' ');
      }
      while (!out.empty() && out.back() == ' ') out.pop_back();
      os << out << '\n';
    };
    emit(t.headers);
    for (const auto& line : text) emit(line);
  }
}

// ---- argument helpers ----

/// "A", "A..B" or "A..B:step".
std::vector<int> parse_range(const std::string& s) {
  static const std::regex re(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*(?::\s*(\d+))?)?\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("bad range '" + s + "' (expected A, A..B or A..B:step)");
  const int a = std::stoi(m[1]);
  const int b = m[2].matched ? std::stoi(m[2]) : a;
  const int step = m[3].matched ? std::stoi(m[3]) : 1;
  if (step <= 0 || b < a) throw UsageError("empty range '" + s + "'");
  if ((b - a) / step > 100000) throw UsageError("range '" + s + "' too long");
  std::vector<int> out;
  for (int x = a; x <= b; x += step) out.push_back(x);
  return out;
}

Multigraph load(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot open " + path);
  Multigraph g = read_mg_file(path);
  if (g.order() < 2) throw UsageError(path + ": n < 2");
  return g;
}

// ---- commands ----

int cmd_spectrum(const std::string& file, Format fmt) {
  const Multigraph g = load(file);
  const auto adj = adjacency_spectrum(g);
  const auto lap = laplacian_spectrum(g);
  const int n = g.order();
  Document doc;
  doc.summary = {{"n", I(n)}, {"lambda2", R(adj[1])}, {"mu2", R(lap[n - 2])}};
  Table t{"spectrum", {"i", "adjacency", "laplacian"}, {}};
  // Adjacency descending, Laplacian ascending: row i pairs lambda_i with mu_i.
  for (int i = 0; i < n; ++i) t.rows.push_back({I(i + 1), R(adj[i]), R(lap[n - 1 - i])});
  doc.tables.push_back(std::move(t));
  render(doc, fmt, std::cout);
  return 0;
}

std::string class_name(GraphClass c) { return c == GraphClass::simple ? "simple" : "multigraph"; }

int cmd_certify(const std::string& file, std::optional<int> t, double tol, Format fmt) {
  const Multigraph g = load(file);
  CertifyOptions opts;
  opts.t = t;
  opts.tolerance = tol;
  const Certificate c = certify(g, opts);

  Document doc;
  doc.summary = {{"n", I(c.n)},
                 {"d", c.d ? I(*c.d) : Cell{}},
                 {"simple", B(c.simple)},
                 {"connected", B(c.connected)},
                 {"lambda2", R(c.lambda2)},
                 {"mu2", R(c.mu2)},
                 {"kappa", I(c.kappa)},
                 {"kappa_prime", I(c.kappa_prime)},
                 {"best_kappa_guarantee", I(c.best_kappa_guarantee())},
                 {"best_kappa_prime_guarantee", I(c.best_kappa_prime_guarantee())},
                 {"sound", B(c.sound())}};
  Table rules{"rules",
              {"rule", "t", "class", "test", "threshold", "value", "fired", "tight", "guarantee", "exact", "holds", "note"},
              {}};
  for (const auto& o : c.outcomes) {
    const bool lam = o.comparison != Comparison::mu2_greater;
    const bool vert = o.conclusion == Conclusion::vertex;
    rules.rows.push_back({S(std::string(rule_name(o.id))), rule_traits(o.id).uses_t || o.id == RuleId::fiedler ? I(o.t) : Cell{},
                          S(class_name(o.graph_class)), S(std::string(comparison_symbol(o.comparison))), R(o.threshold),
                          R(lam ? c.lambda2 : c.mu2), B(o.fired), B(o.tight),
                          S(std::string(vert ? "kappa >= " : "kappa' >= ") + std::to_string(o.guarantee)),
                          I(vert ? c.kappa : c.kappa_prime), B(o.holds), S(o.note)});
  }
  doc.tables.push_back(std::move(rules));
  Table skipped{"skipped", {"rule", "t", "reason"}, {}};
  for (const auto& s : c.skipped)
    skipped.rows.push_back({S(std::string(rule_name(s.id))), s.t ? I(s.t) : Cell{}, S(s.reason)});
  doc.tables.push_back(std::move(skipped));
  render(doc, fmt, std::cout);
  return c.sound() ? 0 : kExitFailure;
}

int cmd_bounds(const std::string& rule_s, const std::string& d_s, const std::string& n_s, const std::string& t_s,
               const std::string& class_s, Format fmt) {
  const auto id = parse_rule(rule_s);
  if (!id) throw UsageError("unknown rule '" + rule_s + "'");
  const RuleTraits tr = rule_traits(*id);
  const bool takes_t = tr.uses_t || *id == RuleId::fiedler;
  if (tr.uses_n && n_s.empty()) throw UsageError("rule " + rule_s + " needs --n");
  const std::vector<int> ds = parse_range(d_s);
  const std::vector<int> ns = tr.uses_n ? parse_range(n_s) : std::vector<int>{0};
  const std::vector<int> ts = takes_t ? parse_range(t_s) : std::vector<int>{0};
  // Default class: the one the rule is stated for.
  const GraphClass gc = class_s.empty() ? (tr.simple_only ? GraphClass::simple : GraphClass::multigraph)
                        : class_s == "simple" ? GraphClass::simple
                                              : GraphClass::multigraph;
  const bool obs = *id == RuleId::thm42_rho;

  Table t{"bounds", {"rule", "d", "n", "t", "class", "test", "threshold", "guarantee"}, {}};
  if (obs) {
    t.headers.push_back("comparison");
    t.headers.push_back("exceeds");
  }
  t.headers.push_back("note");
  for (int d : ds)
    for (int n : ns)
      for (int tv : ts) {
        BoundRule r{*id, d, n, tv, gc};
        std::vector<Cell> row{S(rule_s), I(d), tr.uses_n ? I(n) : Cell{},
                              takes_t ? I(tv) : Cell{}, S(class_name(gc)),
                              S(std::string(comparison_symbol(tr.comparison)))};
        if (auto why = rule_inapplicable(r)) {
          row.insert(row.end(), {Cell{}, Cell{}});
          if (obs) row.insert(row.end(), {Cell{}, Cell{}});
          row.push_back(S("inapplicable: " + *why));
        } else {
          const double tau = evaluate_bound(r);
          const bool vert = tr.conclusion == Conclusion::vertex;
          row.push_back(R(tau));
          row.push_back(S(std::string(vert ? "kappa >= " : "kappa' >= ") + std::to_string(rule_guarantee(r))));
          if (obs) {
            const Rational x = Rational(d) - Rational(1, 3) - Rational(1, n - 3);
            row.push_back(R(x.get_d()));
            row.push_back(B(rho_exceeds(d, n, x)));
          }
          row.push_back(S(""));
        }
        t.rows.push_back(std::move(row));
      }
  Document doc;
  doc.tables.push_back(std::move(t));
  render(doc, fmt, std::cout);
  return 0;
}

std::vector<Multigraph> build_family(const std::string& name, bool extra) {
  static const std::regex sm(R"(^([SM])(\d+)_(\d+)$)"), ba(R"(^([BA])(\d+)$)");
  std::smatch m;
  if (std::regex_match(name, m, sm)) {
    const int l = std::stoi(m[2]), j = std::stoi(m[3]);
    return m[1] == "S" ? build_S(l, j) : build_M(l, j);
  }
  if (std::regex_match(name, m, ba)) {
    const int i = std::stoi(m[2]);
    if (m[1] == "B") return build_B(i);
    return build_A(i, {extra});
  }
  throw UsageError("unknown family '" + name + "' (expected S<l>_<j>, M<l>_<j>, B<j> or A<i>)");
}

int cmd_enumerate(const std::string& family, const std::string& out, bool extra, Format fmt) {
  std::vector<Multigraph> graphs;
  try {
    graphs = build_family(family, extra);
  } catch (const EnumerationError& e) {
    throw UsageError(e.what());
  } catch (const BoundError& e) {
    throw UsageError(e.what());
  }
  const auto members = describe_members(graphs);
  if (!out.empty()) write_family(out, family, members);
  Document doc;
  doc.summary = {{"family", S(family)}, {"count", I(static_cast<long long>(members.size()))}};
  Table t{"members", {"family", "key", "n", "num_cut_edges", "lambda2"}, {}};
  for (const auto& m : members)
    t.rows.push_back({S(family), S(m.key.text()), I(m.graph.order()), I(m.cut_edges), R(m.lambda2)});
  doc.tables.push_back(std::move(t));
  render(doc, fmt, std::cout);
  return 0;
}

long default_trials(const std::string& suite) {
  if (suite == "thm-soundness") return 5000;
  if (suite == "interlacing") return 1000;
  return 500;
}

int cmd_verify(const std::string& suite, std::optional<long> trials, std::optional<std::uint64_t> seed, bool sample,
               bool no_extra, Format fmt) {
  std::vector<std::string> suites;
  if (suite == "all") {
    for (auto s : suite_names()) suites.emplace_back(s);
  } else {
    bool known = false;
    for (auto s : suite_names()) known = known || s == suite;
    if (!known) throw UsageError("unknown suite '" + suite + "'");
    suites.push_back(suite);
  }
  for (const auto& s : suites)
    if (suite_is_randomized(s) && !seed) throw UsageError("suite " + s + " is randomized and needs --seed");

  Document doc;
  Table t{"suites", {"suite", "checks", "failures", "status", "first_failure"}, {}};
  Table notes{"notes", {"suite", "note"}, {}};
  std::vector<SuiteResult> failed;
  for (const auto& s : suites) {
    const long n = trials.value_or(default_trials(s));
    SuiteResult r;
    if (s == "thm-soundness") r = run_thm_soundness(n, *seed);
    else if (s == "interlacing") r = run_interlacing(n, *seed);
    else if (s == "oracle-equivalence") r = run_oracle_equivalence(n, *seed);
    else if (s == "case-checks") r = run_case_checks();
    else r = run_family_verify({sample, !no_extra});
    t.rows.push_back({S(r.suite), I(r.checks), I(r.failures), S(r.passed() ? "PASS" : "FAIL"), S(r.first_failure)});
    for (const auto& note : r.notes) notes.rows.push_back({S(r.suite), S(note)});
    if (!r.passed()) failed.push_back(r);
  }
  doc.tables.push_back(std::move(t));
  doc.tables.push_back(std::move(notes));
  render(doc, fmt, std::cout);
  for (const auto& r : failed) {
    std::cerr << r.suite << ": " << r.first_failure << '\n';
    if (r.counterexample) std::cerr << "counterexample:\n" << serialize_mg(*r.counterexample);
  }
  return failed.empty() ? 0 : kExitFailure;
}

int cmd_random(int n, int d, std::optional<int> max_mult, std::uint64_t seed, int budget, const std::string& out) {
  const Multigraph g = random_regular_multigraph(n, d, max_mult.value_or(d), seed, budget);
  if (out.empty())
    std::cout << serialize_mg(g);
  else
    write_mg_file(out, g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral connectivity certificates for regular multigraphs"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();

  std::string file;
  auto* spectrum = app.add_subcommand("spectrum", "Adjacency and Laplacian spectra of an .mg file");
  spectrum->add_option("file", file, "Input .mg file")->required();

  std::optional<int> cert_t;
  double tol = 1e-9;
  bool as_json = false;
  auto* certify_cmd = app.add_subcommand("certify", "Evaluate every applicable bound on a graph");
  certify_cmd->add_option("file", file, "Input .mg file")->required();
  certify_cmd->add_option("--t", cert_t, "Evaluate only this t");
  certify_cmd->add_option("--tol", tol, "Comparison tolerance")->capture_default_str();
  certify_cmd->add_flag("--json", as_json, "Same as --format json");

  std::string rule, d_s = "3", n_s, t_s = "1", cls;
  auto* bounds = app.add_subcommand("bounds", "Threshold table for one rule");
  bounds->add_option("--rule", rule, "Rule id")->required();
  bounds->add_option("--d", d_s, "Degree or range A..B[:step]")->capture_default_str();
  bounds->add_option("--n", n_s, "Order or range A..B[:step]");
  bounds->add_option("--t", t_s, "t or range A..B[:step]")->capture_default_str();
  bounds->add_option("--class", cls, "Graph class")
      ->check(CLI::IsMember({"simple", "multigraph"}));

  std::string family, out;
  bool extra = false;
  auto* enumerate = app.add_subcommand("enumerate", "Build an enumeration family");
  enumerate->add_option("--family", family, "S<l>_<j>, M<l>_<j>, B5..B11 or A10..A18")->required();
  enumerate->add_option("--out", out, "Directory for manifest.csv and .mg files");
  enumerate->add_flag("--extra-gadget", extra, "Add the B7-J4d-B7 term to A18");

  std::string suite;
  std::optional<long> trials;
  std::optional<std::uint64_t> seed;
  bool sample = false, no_extra = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--trials", trials, "Trial count for randomized suites")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "First seed (randomized suites)");
  verify->add_flag("--sample", sample, "family-verify: skip A18");
  verify->add_flag("--no-extra-gadget", no_extra, "family-verify: skip the extended A18");

  int rn = 0, rd = 0, budget = kDefaultSamplingBudget;
  std::optional<int> max_mult;
  std::uint64_t rseed = 0;
  auto* random = app.add_subcommand("random", "Sample a random regular multigraph");
  random->add_option("--n", rn, "Order")->required();
  random->add_option("--d", rd, "Degree")->required();
  random->add_option("--max-mult", max_mult, "Multiplicity cap (default d)");
  random->add_option("--seed", rseed, "Seed")->required();
  random->add_option("--budget", budget, "Rejection budget")->capture_default_str();
  random->add_option("--out", out, "Output .mg file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;
  try {
    if (*spectrum) return cmd_spectrum(file, fmt);
    if (*certify_cmd) return cmd_certify(file, cert_t, tol, as_json ? Format::json : fmt);
    if (*bounds) return cmd_bounds(rule, d_s, n_s, t_s, cls, fmt);
    if (*enumerate) return cmd_enumerate(family, out, extra, fmt);
    if (*verify) return cmd_verify(suite, trials, seed, sample, no_extra, fmt);
    if (*random) return cmd_random(rn, rd, max_mult, rseed, budget, out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
