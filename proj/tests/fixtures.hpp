#pragma once

// Shared fixtures: the two-whirl example graph, the 14- and 20-variable tree
// pairs, small-graph enumeration, and a walk-based reference for the graph
// parameters used to cross-check the analysis on tiny graphs.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "assoc/digraph.hpp"
#include "assoc/terms.hpp"

namespace fixtures {

using assoc::Digraph;
using assoc::DfsTree;
using assoc::ExtInt;
using assoc::Vertex;

inline const char* const kTwoWhirlGraph = R"(
p0 -> p1
p1 -> p2
p2 -> p3
p3 -> p4
p4 -> p5
p5 -> p6
p6 -> p7
p7 -> p8
p8 -> p9
q -> p5
e2 -> q
e0 -> e1
e1 -> e2
e2 -> e3
e3 -> e4
e4 -> w
e4 -> u
w -> v
u -> v
v -> e4
e4 -> c
u -> z0
z0 -> z1
b0 -> b1
b1 -> b2
b2 -> v
b2 -> vp
v -> l0
l0 -> l1
vp -> y1
y1 -> o0
o0 -> y3
y3 -> vp
o0 -> o1
o1 -> o2
o2 -> o3
)";

inline Digraph two_whirl_graph() { return assoc::parse_digraph(kTwoWhirlGraph); }

/// Finite entries of the omega_G(ell, r) table of the two-whirl graph, rows ell = 1..8.
inline const std::vector<std::vector<int>> kTwoWhirlOmega = {
    {3},
    {6, 4},
    {7, 7, 5},
    {8, 8, 8, 6},
    {8, 8, 8, 7, 7},
    {8, 8, 8, 8, 8, 8},
    {9, 9, 9, 9, 9, 9, 9},
    {10, 10, 10, 10, 10, 10, 10, 10},
};

inline DfsTree tree(std::vector<int> parent) { return DfsTree::from_parents(parent); }

// Root entries are 0.
inline DfsTree b14_t() { return tree({0, 1, 2, 3, 4, 5, 5, 4, 8, 9, 2, 11, 12, 11}); }
inline DfsTree b14_u() { return tree({0, 1, 2, 3, 4, 5, 5, 4, 8, 9, 3, 11, 12, 11}); }
inline DfsTree b20_t() { return tree({0, 1, 2, 3, 4, 4, 1, 7, 8, 9, 10, 11, 12, 8, 14, 7, 16, 16, 18, 19}); }
inline DfsTree b20_u() { return tree({0, 1, 2, 3, 4, 5, 1, 7, 8, 9, 10, 10, 12, 9, 14, 7, 16, 17, 16, 19}); }

/// Labeled digraph on nv vertices; bit (u * nv + v) of mask is the edge u -> v.
inline Digraph graph_from_mask(int nv, unsigned mask) {
  Digraph g(nv);
  for (int u = 0; u < nv; ++u) {
    for (int v = 0; v < nv; ++v) {
      if ((mask >> (u * nv + v)) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

/// Every labeled digraph on 0..max_vertices vertices (1 + 2 + 16 + 512 for 3).
inline std::vector<Digraph> all_small_graphs(int max_vertices = 3) {
  std::vector<Digraph> out;
  for (int nv = 0; nv <= max_vertices; ++nv) {
    for (unsigned mask = 0; mask < (1U << (nv * nv)); ++mask) out.push_back(graph_from_mask(nv, mask));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference parameters by explicit walk search. Walks longer than the
// horizon 2|V| + 4 are taken as evidence of an unbounded walk.

class Reference {
 public:
  explicit Reference(const Digraph& g) : g_(g), n_(g.size()), horizon_(2 * g.size() + 4) {
    reach_.assign(static_cast<std::size_t>(n_ * n_), false);
    for (Vertex u = 0; u < n_; ++u) {
      std::vector<Vertex> stack(g.out(u).begin(), g.out(u).end());
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        if (reach_[idx(u, v)]) continue;
        reach_[idx(u, v)] = true;
        for (Vertex w : g.out(v)) stack.push_back(w);
      }
    }
  }

  bool reaches(Vertex u, Vertex v) const { return reach_[idx(u, v)]; }
  bool nontrivial(Vertex v) const { return reaches(v, v); }
  bool same_scc(Vertex u, Vertex v) const { return u == v || (reaches(u, v) && reaches(v, u)); }

  /// Set of vertices at the end of a walk of exactly `len` steps from `from`.
  std::vector<bool> step(const std::vector<bool>& from, int len) const {
    std::vector<bool> cur = from;
    for (int i = 0; i < len; ++i) {
      std::vector<bool> next(static_cast<std::size_t>(n_), false);
      for (Vertex u = 0; u < n_; ++u) {
        if (!cur[static_cast<std::size_t>(u)]) continue;
        for (Vertex v : g_.out(u)) next[static_cast<std::size_t>(v)] = true;
      }
      cur = std::move(next);
    }
    return cur;
  }

  ExtInt walk_from(Vertex v) const { return longest(v, false); }
  ExtInt walk_to(Vertex v) const { return longest(v, true); }

  /// Period of a whirl structure on the SCC of v by trying every block labelling, or 0.
  int whirl_period(Vertex v) const {
    std::vector<Vertex> comp;
    for (Vertex u = 0; u < n_; ++u) {
      if (same_scc(u, v)) comp.push_back(u);
    }
    const int k = static_cast<int>(comp.size());
    for (int m = 1; m <= k; ++m) {
      std::vector<int> label(static_cast<std::size_t>(k), 0);
      std::function<bool(int)> go = [&](int i) -> bool {
        if (i == k) {
          std::set<int> used(label.begin(), label.end());
          if (static_cast<int>(used.size()) != m) return false;
          for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
              const bool want = (label[static_cast<std::size_t>(a)] + 1) % m == label[static_cast<std::size_t>(b)];
              if (want != g_.has_edge(comp[static_cast<std::size_t>(a)], comp[static_cast<std::size_t>(b)])) return false;
            }
          }
          return true;
        }
        for (int c = 0; c < m; ++c) {
          label[static_cast<std::size_t>(i)] = c;
          if (go(i + 1)) return true;
        }
        return false;
      };
      if (go(0)) return m;
    }
    return 0;
  }

  /// Same-block test for whirl components: equal out-neighbourhoods inside the SCC.
  bool same_block(Vertex a, Vertex b) const {
    for (Vertex x = 0; x < n_; ++x) {
      if (!same_scc(x, a)) continue;
      if (g_.has_edge(a, x) != g_.has_edge(b, x)) return false;
    }
    return true;
  }

  // Simple paths, enumerated explicitly.
  void for_each_path(const std::function<void(const std::vector<Vertex>&)>& fn) const {
    std::vector<Vertex> path;
    std::vector<bool> on(static_cast<std::size_t>(n_), false);
    std::function<void(Vertex)> go = [&](Vertex v) {
      path.push_back(v);
      on[static_cast<std::size_t>(v)] = true;
      fn(path);
      for (Vertex w : g_.out(v)) {
        if (!on[static_cast<std::size_t>(w)]) go(w);
      }
      on[static_cast<std::size_t>(v)] = false;
      path.pop_back();
    };
    for (Vertex v = 0; v < n_; ++v) go(v);
  }

  assoc::GraphParams params() const {
    assoc::GraphParams p;
    p.M = 1;
    bool any_nontrivial = false;
    for (Vertex v = 0; v < n_; ++v) {
      if (!nontrivial(v)) continue;
      any_nontrivial = true;
      const int m = whirl_period(v);
      if (m > 0) p.M = std::lcm(p.M, static_cast<std::int64_t>(m));
    }

    p.P = ExtInt::neg_inf();
    p.E = any_nontrivial ? ExtInt(0) : ExtInt::neg_inf();
    p.O = p.E;
    for_each_path([&](const std::vector<Vertex>& path) {
      const int len = static_cast<int>(path.size()) - 1;
      const bool all_trivial = std::none_of(path.begin(), path.end(), [&](Vertex x) { return nontrivial(x); });
      if (all_trivial) p.P = assoc::max(p.P, ExtInt(len));
      const bool head_trivial = std::none_of(path.begin(), path.end() - 1, [&](Vertex x) { return nontrivial(x); });
      if (head_trivial && nontrivial(path.back())) p.E = assoc::max(p.E, ExtInt(len));
      const bool tail_trivial = std::none_of(path.begin() + 1, path.end(), [&](Vertex x) { return nontrivial(x); });
      if (tail_trivial && nontrivial(path.front())) p.O = assoc::max(p.O, ExtInt(len));
    });

    p.Z = ExtInt::neg_inf();
    for (Vertex a = 0; a < n_; ++a) {
      if (!nontrivial(a) || whirl_period(a) == 0) continue;
      for (Vertex b = 0; b < n_; ++b) {
        if (!same_scc(a, b) || !same_block(a, b)) continue;
        for (Vertex v0 = 0; v0 < n_; ++v0) {
          if (g_.has_edge(a, v0) && !g_.has_edge(b, v0)) p.Z = assoc::max(p.Z, walk_from(v0));
        }
      }
    }

    p.B = ExtInt::neg_inf();
    for (Vertex x = 0; x < n_; ++x) {
      bool split = false;
      for (Vertex a : g_.out(x)) {
        for (Vertex b : g_.out(x)) {
          if (nontrivial(a) && nontrivial(b) && !same_scc(a, b)) split = true;
        }
      }
      if (split) p.B = assoc::max(p.B, walk_to(x));
    }

    p.lambda = ExtInt::neg_inf();
    if (p.E.is_finite() && p.E.value() >= 1) {
      const auto e = p.E.value();
      for_each_path([&](const std::vector<Vertex>& path) {
        if (static_cast<std::int64_t>(path.size()) - 1 != e) return;
        if (!nontrivial(path.back())) return;
        if (std::any_of(path.begin(), path.end() - 1, [&](Vertex x) { return nontrivial(x); })) return;
        const Vertex pre = path[path.size() - 2];
        const Vertex k = path.back();
        for (Vertex w = 0; w < n_; ++w) {
          if (!same_scc(w, k) || !g_.has_edge(w, k)) continue;
          for (Vertex v0 = 0; v0 < n_; ++v0) {
            if (g_.has_edge(w, v0) != g_.has_edge(pre, v0)) p.lambda = assoc::max(p.lambda, walk_from(v0));
          }
        }
      });
    }
    return p;
  }

  ExtInt omega(int ell, int r) const {
    ExtInt best = ExtInt::neg_inf();
    for (Vertex x = 0; x < n_; ++x) {
      // x = v_{r-1}: ends a walk of length r - 1 and continues ell - r + 1 steps into a nontrivial vertex.
      std::vector<bool> all(static_cast<std::size_t>(n_), true);
      std::vector<bool> single(static_cast<std::size_t>(n_), false);
      single[static_cast<std::size_t>(x)] = true;
      bool has_prefix = false;
      for (Vertex s = 0; s < n_ && !has_prefix; ++s) {
        std::vector<bool> from(static_cast<std::size_t>(n_), false);
        from[static_cast<std::size_t>(s)] = true;
        has_prefix = step(from, r - 1)[static_cast<std::size_t>(x)];
      }
      if (!has_prefix) continue;
      const auto ends = step(single, ell - r + 1);
      bool enters = false;
      for (Vertex y = 0; y < n_; ++y) enters = enters || (ends[static_cast<std::size_t>(y)] && nontrivial(y));
      if (!enters) continue;
      for (Vertex y = 0; y < n_; ++y) {
        if (ends[static_cast<std::size_t>(y)] && !nontrivial(y)) best = assoc::max(best, walk_from(y) + ell);
      }
    }
    return best;
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const { return static_cast<std::size_t>(u * n_ + v); }

  ExtInt longest(Vertex v, bool backwards) const {
    std::vector<bool> cur(static_cast<std::size_t>(n_), false);
    cur[static_cast<std::size_t>(v)] = true;
    int best = 0;
    for (int len = 1; len <= horizon_; ++len) {
      std::vector<bool> next(static_cast<std::size_t>(n_), false);
      bool any = false;
      for (Vertex u = 0; u < n_; ++u) {
        if (!cur[static_cast<std::size_t>(u)]) continue;
        for (Vertex w : backwards ? g_.in(u) : g_.out(u)) {
          next[static_cast<std::size_t>(w)] = true;
          any = true;
        }
      }
      if (!any) return ExtInt(best);
      best = len;
      cur = std::move(next);
    }
    return ExtInt::pos_inf();
  }

  const Digraph& g_;
  int n_;
  int horizon_;
  std::vector<bool> reach_;
};

}  // namespace fixtures
