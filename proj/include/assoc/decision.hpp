#pragma once

// Deciding bracketing identities in graph algebras from structural
// parameters, and the classifications built on top of that decision.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "assoc/digraph.hpp"
#include "assoc/pair_params.hpp"
#include "assoc/terms.hpp"

namespace assoc {

inline constexpr int kConditionCount = 10;

struct ConditionResult {
  int number = 0;        // 1..10
  std::string label;     // "(i)" ... "(x)"
  std::string lhs;       // graph side
  std::string relation;  // "|", "<", "<=", ...
  std::string rhs;       // bracketing side
  bool passed = false;
};

struct Decision {
  bool satisfied = false;
  /// t == t': satisfied without evaluating any condition.
  bool trivial = false;
  std::vector<ConditionResult> conditions;
  std::optional<PairParams> pair;
  std::optional<GraphParams> graph;
};

/// Pass/fail of the ten conditions, in order.
std::array<bool, kConditionCount> check_conditions(const GraphAnalysis& g, const PairParams& p);
/// All ten conditions hold.
bool identity_holds(const GraphAnalysis& g, const PairParams& p);

Decision decide_identity(const GraphAnalysis& g, const DfsTree& t, const DfsTree& u);
Decision decide_identity(const Digraph& g, const Bracketing& t, const Bracketing& u);

struct AssociativityCheck {
  /// x1(x2x3) ~ (x1x2)x3 by decide_identity; authoritative.
  bool associative = false;
  /// Nontrivial SCCs are complete with loops and every out-neighbourhood is
  /// an entire nontrivial SCC, read literally.
  bool structural = false;
  /// Vertices whose out-neighbourhood is empty; the two answers can only
  /// differ because of these.
  std::vector<Vertex> edgeless_vertices;

  bool agree() const { return associative == structural; }
};

AssociativityCheck check_associativity(const Digraph& g);
bool is_associative(const Digraph& g);

enum class UndirectedClass { AllIdentities, EvenMIdentities, NoIdentities };

/// Throws std::invalid_argument if some edge lacks its reverse.
UndirectedClass classify_undirected(const Digraph& g);
std::string to_string(UndirectedClass c);

struct SpectrumClass {
  enum class Kind { Constant1, Constant2, Exponential };
  Kind kind = Kind::Constant1;
  /// Vertices of the weakly connected component that forces the class
  /// (a directed bipartite one for Constant2, an offending one for Exponential).
  std::vector<Vertex> component;
  std::string witness;
};

SpectrumClass classify_dichotomy(const Digraph& g);
std::string to_string(SpectrumClass::Kind k);

/// Weakly connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> weak_components(const Digraph& g);
/// No loops, no vertex with both an in- and an out-edge, at least one edge.
bool is_directed_bipartite_with_edge(const Digraph& g);

}  // namespace assoc
