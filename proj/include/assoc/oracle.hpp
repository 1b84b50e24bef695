#pragma once

// Brute-force semantics of graph algebras: term evaluation over V + {bottom}
// and comparison of homomorphism sets of DFS trees.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "assoc/digraph.hpp"
#include "assoc/terms.hpp"

namespace assoc {

/// A vertex, or the absorbing element (std::nullopt).
using AlgebraElement = std::optional<Vertex>;

/// u * v = u if (u, v) is an edge, otherwise the absorbing element.
AlgebraElement multiply(const Digraph& g, AlgebraElement a, AlgebraElement b);

/// assignment[i] is the value of x_{i+1}.
AlgebraElement eval_term(const Digraph& g, const Bracketing& t, std::span<const AlgebraElement> assignment);

/// phi[i] is the image of label i + 1.
bool is_homomorphism(const DfsTree& tree, const Digraph& g, std::span<const Vertex> phi);

struct OracleOptions {
  /// Upper bound on the number of maps an enumeration may range over.
  std::uint64_t max_maps = 100'000'000;
};

/// 10^8, or the value of ASSOC_SPECTRA_MAX_MAPS when set.
std::uint64_t default_max_maps();

/// The set of homomorphisms X_n -> V of a DFS tree into a graph.
///
/// A map phi is coded base |V| with phi(x1) as the most significant digit;
/// the set is kept as a bitset over all |V|^n codes.
class HomSignature {
 public:
  HomSignature() = default;
  HomSignature(std::uint64_t universe, int vertices, int n);

  void insert(std::uint64_t code) { words_[code >> 6] |= std::uint64_t{1} << (code & 63); }
  bool contains(std::uint64_t code) const { return ((words_[code >> 6] >> (code & 63)) & 1U) != 0; }
  std::uint64_t count() const;
  /// Sorted homomorphism codes.
  std::vector<std::uint64_t> homomorphisms() const;
  /// Decodes one code into vertex images of x1..xn.
  std::vector<Vertex> decode(std::uint64_t code) const;

  std::size_t hash() const;
  friend bool operator==(const HomSignature&, const HomSignature&) = default;

 private:
  std::uint64_t universe_ = 0;
  int vertices_ = 0;
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct HomSignatureHash {
  std::size_t operator()(const HomSignature& s) const { return s.hash(); }
};

/// Throws BudgetExceeded when |V|^n exceeds options.max_maps.
HomSignature hom_signature(const Digraph& g, const DfsTree& tree, const OracleOptions& options = {});
HomSignature hom_signature(const Digraph& g, const Bracketing& t, const OracleOptions& options = {});

/// Hom-set equality of G(t) and G(t').
bool decide_identity_oracle(const Digraph& g, const Bracketing& t, const Bracketing& u,
                            const OracleOptions& options = {});
/// Term-operation equality over all (|V| + 1)^n assignments.
bool decide_identity_by_evaluation(const Digraph& g, const Bracketing& t, const Bracketing& u,
                                   const OracleOptions& options = {});

}  // namespace assoc
