#pragma once

// Numerical parameters of a pair of distinct bracketings of the same size.

#include <set>
#include <utility>
#include <vector>

#include "assoc/terms.hpp"

namespace assoc {

struct PairParams {
  int H = 0;       // min(h(T), h(T'))
  int M = 0;       // gcd of the nonzero depth differences |d_T(x) - d_T'(x)|
  int L = 0;       // deepest level up to which every vertex has equal depth in both trees
  int Y = -1;      // largest m with: h(T_x) <= m or h(T'_x) <= m  implies  T_x == T'_x
  int Z = 0;       // least height of an equal subtree whose root has two different parents
  std::set<int> Delta;                 // x with T_x != T'_x
  std::set<std::pair<int, int>> Omega; // (depth, subtree height) over Delta, both trees
  int xi = 0;                          // min d + h over Omega
  std::vector<int> omega_prefix;       // omega(0), ..., omega(xi)
  std::set<int> Lambda;                // x with differing depths, one of them L + 1
  int lambda = 0;                      // min over Lambda of max(h(T_x), h(T'_x))

  /// omega(r); constant xi from r = xi on.
  int omega(int r) const;

  friend bool operator==(const PairParams&, const PairParams&) = default;
};

/// Throws std::invalid_argument for equal trees or a size mismatch.
PairParams pair_params(const DfsTree& t, const DfsTree& u);
PairParams pair_params(const Bracketing& t, const Bracketing& u);

inline int omega_t(const PairParams& p, int r) { return p.omega(r); }

}  // namespace assoc
