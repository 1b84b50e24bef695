#include "assoc/pair_params.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace assoc {

int PairParams::omega(int r) const {
  if (r < 0) throw std::invalid_argument("omega(r) requires r >= 0");
  if (r >= xi) return xi;
  return omega_prefix[static_cast<std::size_t>(r)];
}

PairParams pair_params(const DfsTree& t, const DfsTree& u) {
  if (t.size() != u.size()) throw std::invalid_argument("bracketings have different sizes");
  if (t == u) throw std::invalid_argument("pair parameters need two distinct bracketings");
  const int n = t.size();
  constexpr int kNone = std::numeric_limits<int>::max();

  PairParams p;
  p.H = std::min(t.height(), u.height());

  int first_split = kNone;  // least min(d_T, d_T') over vertices with differing depth
  for (int x = 1; x <= n; ++x) {
    const int dt = t.depth(x);
    const int du = u.depth(x);
    if (dt == du) continue;
    p.M = std::gcd(p.M, std::abs(dt - du));
    first_split = std::min(first_split, std::min(dt, du));
  }
  p.L = first_split - 1;

  int y_bound = kNone;
  int z = kNone;
  for (int x = 1; x <= n; ++x) {
    const int ht = t.subtree_height(x);
    const int hu = u.subtree_height(x);
    if (same_subtree(t, u, x)) {
      if (x >= 2 && t.parent(x) != u.parent(x)) z = std::min(z, ht);
      continue;
    }
    p.Delta.insert(x);
    p.Omega.emplace(t.depth(x), ht);
    p.Omega.emplace(u.depth(x), hu);
    y_bound = std::min(y_bound, std::min(ht, hu));
  }
  p.Y = y_bound - 1;
  if (z == kNone) throw std::logic_error("no vertex with equal subtrees and distinct parents");
  p.Z = z;

  p.xi = kNone;
  for (const auto& [d, h] : p.Omega) p.xi = std::min(p.xi, d + h);
  for (int r = 0; r <= p.xi; ++r) {
    if (r == p.xi) {
      p.omega_prefix.push_back(p.xi);
      break;
    }
    int best = kNone;
    for (const auto& [d, h] : p.Omega) {
      if (d <= r) best = std::min(best, d + h);
    }
    p.omega_prefix.push_back(best);
  }

  p.lambda = kNone;
  for (int x = 1; x <= n; ++x) {
    const int dt = t.depth(x);
    const int du = u.depth(x);
    if (dt == du || (dt != p.L + 1 && du != p.L + 1)) continue;
    p.Lambda.insert(x);
    p.lambda = std::min(p.lambda, std::max(t.subtree_height(x), u.subtree_height(x)));
  }
  return p;
}

PairParams pair_params(const Bracketing& t, const Bracketing& u) {
  if (t.size() != u.size()) throw std::invalid_argument("bracketings have different sizes");
  return pair_params(bracketing_to_dfs_tree(t), bracketing_to_dfs_tree(u));
}

}  // namespace assoc
