#pragma once

// Finite digraphs, strongly connected components, whirls, and the structural
// parameters that govern which bracketing identities a graph algebra satisfies.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assoc/ext_int.hpp"

namespace assoc {

using Vertex = int;

/// Finite digraph with named vertices; loops allowed, no multi-edges.
class Digraph {
 public:
  Digraph() = default;
  /// Vertices named "0".."n-1".
  explicit Digraph(int n);
  Digraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  /// Returns the existing vertex if the name is already declared.
  Vertex add_vertex(std::string_view name);
  void add_edge(Vertex u, Vertex v);
  void add_edge(std::string_view u, std::string_view v);

  int size() const { return static_cast<int>(names_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0;
  }
  std::span<const Vertex> out(Vertex u) const { return out_[static_cast<std::size_t>(u)]; }
  std::span<const Vertex> in(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  const std::string& name(Vertex v) const { return names_[static_cast<std::size_t>(v)]; }
  std::optional<Vertex> find(std::string_view name) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  bool is_symmetric() const;

  /// Subgraph induced on the given vertices (renumbered in the given order).
  Digraph induced(std::span<const Vertex> vertices) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, Vertex, std::less<>> by_name_;
  std::vector<std::vector<std::uint8_t>> adj_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
};

/// Parses "u -> v" / "vertex u" lines, or a DOT digraph (edges and node
/// statements). Throws ParseError with a line-based position.
Digraph parse_digraph(std::string_view text);
Digraph load_digraph(const std::filesystem::path& path);
/// Edge-list text accepted by parse_digraph.
std::string format_digraph(const Digraph& g);

struct SccDecomposition {
  std::vector<int> component;                 // component id per vertex
  std::vector<std::vector<Vertex>> members;   // sorted vertex lists
  std::vector<bool> nontrivial;               // >= 2 vertices or a looped vertex

  int count() const { return static_cast<int>(members.size()); }
  bool is_nontrivial(Vertex v) const { return nontrivial[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])]; }
};

/// Components are numbered in reverse topological order of the condensation
/// (a component only has edges into components with smaller ids).
SccDecomposition scc_decompose(const Digraph& g);

/// Cyclically ordered blocks B_0..B_{m-1}; the edges inside the component are
/// exactly B_i x B_{i+1 mod m}. B_0 holds the smallest vertex of the component.
struct WhirlStructure {
  std::vector<std::vector<Vertex>> blocks;

  int period() const { return static_cast<int>(blocks.size()); }
  /// Index of the block containing v, or -1.
  int block_of(Vertex v) const;
};

std::optional<WhirlStructure> whirl_structure(const Digraph& g, const SccDecomposition& scc, int component);

struct GraphParams {
  std::int64_t M = 1;  // M_G
  ExtInt P;            // longest pleasant path
  ExtInt E;            // longest entryway
  ExtInt O;            // longest outlet
  ExtInt Z;            // Z_G
  ExtInt B;            // B_G
  ExtInt lambda;       // lambda_G

  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

/// All graph-side analyses of one digraph, computed once.
///
/// Immutable after construction apart from the omega memo, which is guarded
/// internally; every member is safe to call concurrently.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(Digraph g);
  GraphAnalysis(const GraphAnalysis&) = delete;
  GraphAnalysis& operator=(const GraphAnalysis&) = delete;

  const Digraph& graph() const { return graph_; }
  const SccDecomposition& scc() const { return scc_; }
  /// Whirl structure of a nontrivial component, if it is a whirl.
  const std::optional<WhirlStructure>& whirl(int component) const { return whirls_[static_cast<std::size_t>(component)]; }
  bool has_nontrivial_scc() const { return has_nontrivial_; }

  /// Longest walk starting (ending) at v; +inf once a nontrivial SCC is reachable.
  ExtInt longest_walk_from(Vertex v) const { return walk_from_[static_cast<std::size_t>(v)]; }
  ExtInt longest_walk_to(Vertex v) const { return walk_to_[static_cast<std::size_t>(v)]; }
  /// Longest pleasant path starting (ending) at a trivial vertex v; -inf otherwise.
  ExtInt longest_pleasant_from(Vertex v) const { return pleasant_from_[static_cast<std::size_t>(v)]; }
  ExtInt longest_pleasant_to(Vertex v) const { return pleasant_to_[static_cast<std::size_t>(v)]; }

  bool all_nontrivial_sccs_are_whirls() const { return all_whirls_; }
  bool no_path_between_nontrivial_sccs() const { return no_scc_path_; }

  const GraphParams& params() const { return params_; }
  /// omega_G(ell, r) for 1 <= r <= ell, memoised.
  ExtInt omega(int ell, int r) const;

 private:
  ExtInt compute_omega(int ell, int r) const;

  Digraph graph_;
  SccDecomposition scc_;
  std::vector<std::optional<WhirlStructure>> whirls_;
  std::vector<ExtInt> walk_from_, walk_to_, pleasant_from_, pleasant_to_;
  bool has_nontrivial_ = false;
  bool all_whirls_ = true;
  bool no_scc_path_ = true;
  GraphParams params_;

  mutable std::mutex omega_mutex_;
  mutable std::map<std::pair<int, int>, ExtInt> omega_memo_;
};

ExtInt longest_walk_from(const Digraph& g, Vertex v);
ExtInt longest_walk_to(const Digraph& g, Vertex v);
GraphParams graph_params(const Digraph& g);
ExtInt omega_g(const Digraph& g, int ell, int r);
bool no_path_between_nontrivial_sccs(const Digraph& g);
bool all_nontrivial_sccs_are_whirls(const Digraph& g);

}  // namespace assoc
