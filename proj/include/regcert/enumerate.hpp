#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "regcert/canonical.hpp"
#include "regcert/connectivity.hpp"
#include "regcert/multigraph.hpp"

namespace regcert {

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Erdos-Gallai test for simple graphs; order of `degrees` is irrelevant.
bool is_graphical(std::span<const int> degrees);

/// Every multigraph with the given degree sequence and entries <= max_mult,
/// one per isomorphism class, sorted by canonical key. Vertex v of each
/// representative does not necessarily have degree degrees[v].
std::vector<Multigraph> gen_multigraphs(std::vector<int> degrees, int max_mult);

/// gen_multigraphs with max_mult = 1; throws on non-graphical input.
std::vector<Multigraph> gen_simple_graphs(std::vector<int> degrees);

/// {3^(j-2l-1), 2^(2l+1)}, descending.
std::vector<int> s_degree_sequence(int l, int j);

struct FComponent {
  bool cycle = false;
  std::vector<int> vertices;  // in path or cycle order
  int order() const { return static_cast<int>(vertices.size()); }
  bool odd_path() const { return !cycle && order() % 2 == 1; }
};

/// f(H): the subgraph induced by the degree-2 vertices of H, split into
/// path and cycle components.
struct DegreeTwoProfile {
  int graph_order = 0;
  std::vector<FComponent> components;
  int odd_paths() const;
  int cycles() const;
};

enum class FVerdict { keep, reject_short_cycle, reject_multiple_odd_paths, reject_no_odd_path };
std::string_view verdict_reason(FVerdict v);

struct FClassification {
  DegreeTwoProfile profile;
  FVerdict verdict = FVerdict::keep;
};

/// Keep iff f(H) is one cycle through all vertices of H, or has no cycle
/// and exactly one odd path. `h` must be simple.
FClassification classify_f(const Multigraph& h);

using Matching = std::vector<Edge>;

/// All maximum matchings of a disjoint union of paths and cycles, each
/// sorted, in a deterministic order.
std::vector<Matching> max_matchings_of_f(const DegreeTwoProfile& profile);

/// Double the matched edges of h, one multigraph per matching, deduplicated
/// by canonical key and sorted.
std::vector<Multigraph> lift_to_M(const Multigraph& h, const std::vector<Matching>& matchings);

/// At least 3 vertices and no cut-vertex.
bool is_two_vertex_connected(const Multigraph& g);

std::vector<Multigraph> build_S(int l, int j);
std::vector<Multigraph> build_M(int l, int j);
/// Connected, bridgeless, degree sequence {3^(j-1), 2}. j in {5,7,9,11}.
std::vector<Multigraph> build_B(int j);

/// Degree-2 bridge gadgets. J4_double is the 4-cycle with one doubled edge,
/// attached at its two adjacent degree-2 vertices.
enum class Gadget { J2, J4, J4_prime, J4_double };
std::string_view gadget_name(Gadget g);
Multigraph gadget_graph(Gadget g);
/// The two degree-2 vertices of a gadget.
std::pair<int, int> gadget_ports(Gadget g);

/// The unique vertex of degree 2; throws EnumerationError otherwise.
int degree_two_vertex(const Multigraph& g);

/// left + right joined by a single edge between their degree-2 vertices, or
/// through a gadget by two single edges. Vertex order: left, gadget, right.
Multigraph join(const Multigraph& left, const Multigraph& right, std::optional<Gadget> bridge = std::nullopt);

struct FamilyTerm {
  int left_j;
  int right_j;
  std::optional<Gadget> bridge;
};

struct AssemblyOptions {
  /// Add B7 - J4_double - B7 to A_18, the one middle block the published
  /// union omits.
  bool include_extra_gadget = false;
};

std::vector<FamilyTerm> family_terms(int i, const AssemblyOptions& opts = {});
std::string family_term_name(const FamilyTerm& term);

/// Memoizes B_j so several A_i builds share them.
class FamilyBuilder {
 public:
  const std::vector<Multigraph>& B(int j);
  /// Members of A_i sorted by canonical key; every member is checked
  /// against the family predicate.
  std::vector<Multigraph> A(int i, const AssemblyOptions& opts = {});
  /// Members produced by one term of the union, deduplicated.
  std::vector<Multigraph> term(const FamilyTerm& t);

 private:
  std::map<int, std::vector<Multigraph>> b_;
};

std::vector<Multigraph> build_A(int i, const AssemblyOptions& opts = {});

/// 3-regular, kappa' = 1, each cut-edge leaves components of order >= 5
/// (i <= 12) or >= 7, and the cut-edge count allowed for i.
std::optional<std::string> family_predicate_violation(int i, const Multigraph& g);

struct FamilyMember {
  Multigraph graph;
  CanonicalKey key;
  int cut_edges = 0;
  double lambda2 = 0;
};

std::vector<FamilyMember> describe_members(const std::vector<Multigraph>& graphs);

struct FamilyReport {
  int i = 0;
  std::size_t count = 0;
  double rho = 0;
  double min_lambda2 = 0;
  FamilyMember argmin;
  double margin = 0;  // min_lambda2 - rho
  bool passed = false;
};

FamilyReport verify_members(int i, const std::vector<FamilyMember>& members, double tol = 1e-9);
FamilyReport verify_family(int i, const AssemblyOptions& opts = {}, double tol = 1e-9);

/// CSV with header family,key,n,num_cut_edges,lambda2 (9 decimals).
std::string manifest_csv(std::string_view family, const std::vector<FamilyMember>& members);
/// Writes <dir>/manifest.csv and one <key>.mg per member.
void write_family(const std::filesystem::path& dir, std::string_view family, const std::vector<FamilyMember>& members);

}  // namespace regcert
