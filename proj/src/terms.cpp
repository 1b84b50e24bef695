#include "assoc/terms.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>

namespace assoc {

namespace {

// End (exclusive) of the subterm whose code starts at pos.
std::size_t subterm_end(std::span<const int> code, std::size_t pos) {
  std::size_t pending = 1;
  while (pending > 0) {
    if (pos >= code.size()) throw std::invalid_argument("truncated bracketing code");
    pending += code[pos] == 0 ? 1 : -1;
    ++pos;
  }
  return pos;
}

Bracketing slice(std::span<const int> code, std::size_t begin, std::size_t end) {
  std::vector<int> sub(code.begin() + static_cast<std::ptrdiff_t>(begin),
                       code.begin() + static_cast<std::ptrdiff_t>(end));
  int offset = 0;
  for (int c : sub) {
    if (c != 0) {
      offset = c - 1;
      break;
    }
  }
  for (int& c : sub) {
    if (c != 0) c -= offset;
  }
  return Bracketing::from_code(std::move(sub));
}

class BracketingParser {
 public:
  explicit BracketingParser(std::string_view text) : text_(text) {}

  std::vector<int> parse() {
    std::vector<int> first = term();
    skip_space();
    std::vector<int> code;
    if (pos_ == text_.size()) {
      code = std::move(first);
    } else {
      std::vector<int> second = term();
      skip_space();
      if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
      code.push_back(0);
      code.insert(code.end(), first.begin(), first.end());
      code.insert(code.end(), second.begin(), second.end());
    }
    int expected = 1;
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (code[i] == 0) continue;
      if (code[i] != expected) {
        throw ParseError("variable order error: expected x" + std::to_string(expected) + " but found x" +
                             std::to_string(code[i]),
                         leaf_pos_[static_cast<std::size_t>(expected - 1)]);
      }
      ++expected;
    }
    return code;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::vector<int> term() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == 'x') {
      const std::size_t start = pos_++;
      std::int64_t value = 0;
      std::size_t digits = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 1'000'000) throw ParseError("variable index too large", start);
        ++pos_;
        ++digits;
      }
      if (digits == 0 || value == 0) throw ParseError("expected a positive variable index", start + 1);
      leaf_pos_.push_back(start);
      return {static_cast<int>(value)};
    }
    if (c == '(') {
      ++pos_;
      std::vector<int> code{0};
      std::vector<int> a = term();
      std::vector<int> b = term();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      code.insert(code.end(), a.begin(), a.end());
      code.insert(code.end(), b.begin(), b.end());
      return code;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> leaf_pos_;
};

void format_into(std::span<const int> code, std::size_t& pos, std::string& out) {
  const int c = code[pos++];
  if (c != 0) {
    out += 'x';
    out += std::to_string(c);
    return;
  }
  out += '(';
  format_into(code, pos, out);
  format_into(code, pos, out);
  out += ')';
}

}  // namespace

Bracketing Bracketing::variable() { return from_code({1}); }

Bracketing Bracketing::product(const Bracketing& left, const Bracketing& right) {
  std::vector<int> code{0};
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  for (int c : right.code_) code.push_back(c == 0 ? 0 : c + left.n_);
  return from_code(std::move(code));
}

Bracketing Bracketing::from_code(std::vector<int> code) {
  if (code.empty()) throw std::invalid_argument("empty bracketing code");
  if (subterm_end(code, 0) != code.size()) throw std::invalid_argument("malformed bracketing code");
  int expected = 1;
  for (int c : code) {
    if (c == 0) continue;
    if (c != expected) throw std::invalid_argument("bracketing leaves must be x1..xn in order");
    ++expected;
  }
  Bracketing t;
  t.code_ = std::move(code);
  t.n_ = expected - 1;
  return t;
}

Bracketing Bracketing::left() const {
  if (is_variable()) throw std::logic_error("a variable has no factors");
  return slice(code_, 1, subterm_end(code_, 1));
}

Bracketing Bracketing::right() const {
  if (is_variable()) throw std::logic_error("a variable has no factors");
  return slice(code_, subterm_end(code_, 1), code_.size());
}

Bracketing parse_bracketing(std::string_view text) {
  return Bracketing::from_code(BracketingParser(text).parse());
}

std::string format_bracketing(const Bracketing& t) {
  std::string out;
  std::size_t pos = 0;
  format_into(t.code(), pos, out);
  if (!t.is_variable()) out = out.substr(1, out.size() - 2);
  return out;
}

// ---------------------------------------------------------------------------

DfsTree DfsTree::from_parents(std::span<const int> parent) {
  std::vector<int> p;
  if (!parent.empty() && parent[0] == 0 && parent.size() >= 2 && parent[1] == 0) {
    p.assign(parent.begin(), parent.end());  // 1-based with unused slot 0
  } else {
    p.push_back(0);
    p.insert(p.end(), parent.begin(), parent.end());
  }
  DfsTree t;
  t.n_ = static_cast<int>(p.size()) - 1;
  if (t.n_ < 1) throw std::invalid_argument("a DFS tree needs at least one vertex");
  if (p[1] != 0) throw std::invalid_argument("vertex 1 must be the root (parent 0)");
  // Walk the current root-to-leaf stack: vertex i+1 must attach to a vertex on it.
  std::vector<int> stack{1};
  for (int i = 2; i <= t.n_; ++i) {
    const int q = p[static_cast<std::size_t>(i)];
    while (!stack.empty() && stack.back() != q) stack.pop_back();
    if (stack.empty()) {
      throw std::invalid_argument("labels are not in depth-first order at vertex " + std::to_string(i));
    }
    stack.push_back(i);
  }
  t.parent_ = std::move(p);
  t.derive();
  return t;
}

DfsTree DfsTree::from_depths(const DepthSequence& d) { return tree_from_depth_sequence(d); }

void DfsTree::derive() {
  const auto size = static_cast<std::size_t>(n_) + 1;
  depth_.assign(size, 0);
  height_.assign(size, 0);
  end_.assign(size, 0);
  children_.assign(size, {});
  for (int i = 2; i <= n_; ++i) {
    depth_[i] = depth_[parent_[i]] + 1;
    children_[parent_[i]].push_back(i);
  }
  for (int i = n_; i >= 1; --i) {
    end_[i] = std::max(end_[i], i);
    if (i >= 2) {
      const int p = parent_[i];
      height_[p] = std::max(height_[p], height_[i] + 1);
      end_[p] = std::max(end_[p], end_[i]);
    }
  }
}

DepthSequence DfsTree::depth_sequence() const {
  return DepthSequence(depth_.begin() + 1, depth_.end());
}

bool same_subtree(const DfsTree& a, const DfsTree& b, int x) {
  if (a.subtree_end(x) != b.subtree_end(x)) return false;
  for (int y = x + 1; y <= a.subtree_end(x); ++y) {
    if (a.parent(y) != b.parent(y)) return false;
  }
  return true;
}

DfsTree bracketing_to_dfs_tree(const Bracketing& t) {
  // G(t1 t2): the root of G(t2) becomes the last child of the root of G(t1).
  // Roots are leftmost variables, so each product node links the first
  // variable of its right factor to the first variable of its left factor.
  const auto code = t.code();
  std::vector<int> parent(static_cast<std::size_t>(t.size()) + 1, 0);
  std::function<int(std::size_t&)> walk = [&](std::size_t& pos) -> int {
    const int c = code[pos++];
    if (c != 0) return c;
    const int left_root = walk(pos);
    const int right_root = walk(pos);
    parent[static_cast<std::size_t>(right_root)] = left_root;
    return left_root;
  };
  std::size_t pos = 0;
  walk(pos);
  return DfsTree::from_parents(parent);
}

Bracketing dfs_tree_to_bracketing(const DfsTree& tree) {
  // S(x) = (((x S(c1)) S(c2)) ... S(ck)) over the children of x in order.
  std::function<std::vector<int>(int)> build = [&](int x) {
    const auto kids = tree.children(x);
    std::vector<int> code(kids.size(), 0);
    code.push_back(x);
    for (int c : kids) {
      std::vector<int> sub = build(c);
      code.insert(code.end(), sub.begin(), sub.end());
    }
    return code;
  };
  return Bracketing::from_code(build(1));
}

DepthSequence depth_sequence(const DfsTree& tree) { return tree.depth_sequence(); }

DfsTree tree_from_depth_sequence(const DepthSequence& d) {
  if (d.empty()) throw std::invalid_argument("empty depth sequence");
  if (d[0] != 0) throw std::invalid_argument("not a zag sequence: violation at index 1");
  std::vector<int> parent(d.size() + 1, 0);
  std::vector<int> last_at_depth{1};  // last_at_depth[k]: latest label with depth k
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] < 1 || d[i] > d[i - 1] + 1) {
      throw std::invalid_argument("not a zag sequence: violation at index " + std::to_string(i + 1));
    }
    const auto k = static_cast<std::size_t>(d[i]);
    parent[i + 1] = last_at_depth[k - 1];
    last_at_depth.resize(k + 1);
    last_at_depth[k] = static_cast<int>(i + 1);
  }
  return DfsTree::from_parents(parent);
}

void for_each_dfs_tree(int n, const std::function<void(const DfsTree&)>& visit) {
  if (n < 1) throw std::invalid_argument("tree size must be positive");
  DepthSequence d(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == d.size()) {
      visit(tree_from_depth_sequence(d));
      return;
    }
    for (int k = 1; k <= d[i - 1] + 1; ++k) {
      d[i] = k;
      extend(i + 1);
    }
  };
  extend(1);
}

std::vector<DfsTree> enumerate_dfs_trees(int n) {
  std::vector<DfsTree> out;
  for_each_dfs_tree(n, [&](const DfsTree& t) { out.push_back(t); });
  return out;
}

std::vector<Bracketing> enumerate_bracketings(int n) {
  std::vector<Bracketing> out;
  for_each_dfs_tree(n, [&](const DfsTree& t) { out.push_back(dfs_tree_to_bracketing(t)); });
  return out;
}

std::uint64_t catalan(int k) {
  if (k < 0) throw std::invalid_argument("negative Catalan index");
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

std::uint64_t count_height_at_most_2(int n) {
  if (n < 2) throw std::invalid_argument("count_height_at_most_2 requires n >= 2");
  std::uint64_t count = 0;
  for_each_dfs_tree(n, [&](const DfsTree& t) { count += t.height() <= 2 ? 1 : 0; });
  return count;
}

}  // namespace assoc
