#pragma once

// Bracketings of x1 x2 ... xn, their DFS trees and depth sequences.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/errors.hpp"

namespace assoc {

/// A full binary tree whose leaves are x1..xn from left to right.
///
/// Stored as its pre-order code: 0 marks a product node, i > 0 the leaf xi.
/// The code of a full binary tree is unique, so equality is code equality.
class Bracketing {
 public:
  static Bracketing variable();  // the single term x1
  static Bracketing product(const Bracketing& left, const Bracketing& right);
  static Bracketing from_code(std::vector<int> code);

  int size() const { return n_; }
  std::span<const int> code() const { return code_; }
  bool is_variable() const { return code_.size() == 1; }

  /// Factors of a product; the right factor is renumbered to start at x1.
  Bracketing left() const;
  Bracketing right() const;

  friend bool operator==(const Bracketing&, const Bracketing&) = default;
  friend auto operator<=>(const Bracketing&, const Bracketing&) = default;

 private:
  std::vector<int> code_;
  int n_ = 0;
};

Bracketing parse_bracketing(std::string_view text);
/// Canonical text: fully parenthesised, outer parentheses dropped, no spaces.
std::string format_bracketing(const Bracketing& t);

/// Length-n sequence with d[0] = 0 and 1 <= d[i+1] <= d[i] + 1 (0-based).
using DepthSequence = std::vector<int>;

/// Rooted tree on labels 1..n numbered in depth-first order.
class DfsTree {
 public:
  DfsTree() = default;

  /// parent[i] for i = 1..n; parent[1] must be 0. Index 0 is ignored and
  /// may be omitted (size n + 1 or n accepted, the latter read as labels
  /// 1..n). Throws std::invalid_argument if the labels are not a DFS order.
  static DfsTree from_parents(std::span<const int> parent);
  static DfsTree from_depths(const DepthSequence& depth);

  int size() const { return n_; }
  int parent(int x) const { return parent_[x]; }
  int depth(int x) const { return depth_[x]; }
  /// h(T_x): height of the subtree rooted at x.
  int subtree_height(int x) const { return height_[x]; }
  /// Last label of the subtree rooted at x; the subtree is [x, subtree_end(x)].
  int subtree_end(int x) const { return end_[x]; }
  std::span<const int> children(int x) const { return children_[x]; }
  int height() const { return n_ == 0 ? 0 : height_[1]; }

  /// Parents as a 1-based vector of size n + 1 (index 0 and root unused, 0).
  const std::vector<int>& parents() const { return parent_; }
  DepthSequence depth_sequence() const;

  friend bool operator==(const DfsTree& a, const DfsTree& b) { return a.parent_ == b.parent_; }

 private:
  void derive();

  int n_ = 0;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> height_;
  std::vector<int> end_;
  std::vector<std::vector<int>> children_;
};

/// T_x == T'_x as rooted induced subtrees.
bool same_subtree(const DfsTree& a, const DfsTree& b, int x);

DfsTree bracketing_to_dfs_tree(const Bracketing& t);
Bracketing dfs_tree_to_bracketing(const DfsTree& tree);

DepthSequence depth_sequence(const DfsTree& tree);
/// Throws std::invalid_argument naming the first offending (1-based) index.
DfsTree tree_from_depth_sequence(const DepthSequence& d);

/// Calls visit on every DFS tree of size n, lexicographically by depth sequence.
void for_each_dfs_tree(int n, const std::function<void(const DfsTree&)>& visit);
std::vector<DfsTree> enumerate_dfs_trees(int n);
std::vector<Bracketing> enumerate_bracketings(int n);

std::uint64_t catalan(int k);
/// Number of DFS trees on n vertices of height at most 2 (by enumeration).
std::uint64_t count_height_at_most_2(int n);

}  // namespace assoc
