#include "assoc/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "assoc/errors.hpp"

namespace assoc {

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) {
  for (int i = 0; i < n; ++i) add_vertex(std::to_string(i));
}

Digraph::Digraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Digraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Vertex Digraph::add_vertex(std::string_view name) {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  const auto v = static_cast<Vertex>(names_.size());
  names_.emplace_back(name);
  by_name_.emplace(std::string(name), v);
  for (auto& row : adj_) row.push_back(0);
  adj_.emplace_back(names_.size(), 0);
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

void Digraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw std::out_of_range("edge endpoint is not a vertex");
  auto& cell = adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  if (cell != 0) return;
  cell = 1;
  auto& o = out_[static_cast<std::size_t>(u)];
  o.insert(std::upper_bound(o.begin(), o.end(), v), v);
  auto& i = in_[static_cast<std::size_t>(v)];
  i.insert(std::upper_bound(i.begin(), i.end(), u), u);
  ++edge_count_;
}

void Digraph::add_edge(std::string_view u, std::string_view v) {
  const Vertex a = add_vertex(u);
  const Vertex b = add_vertex(v);
  add_edge(a, b);
}

std::optional<Vertex> Digraph::find(std::string_view name) const {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> Digraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : out(u)) result.emplace_back(u, v);
  }
  return result;
}

bool Digraph::is_symmetric() const {
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : out(u)) {
      if (!has_edge(v, u)) return false;
    }
  }
  return true;
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
  Digraph sub;
  for (Vertex v : vertices) sub.add_vertex(name(v));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) sub.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return sub;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class DotLexer {
 public:
  enum class Kind { Id, Arrow, Semi, LBrace, RBrace, Equals, Comma, End };
  struct Token {
    Kind kind;
    std::string text;
    std::size_t pos;
  };

  explicit DotLexer(std::string_view text) : text_(text) {}

  Token next() {
    skip();
    if (pos_ >= text_.size()) return {Kind::End, "", pos_};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Kind::Arrow, "->", start};
    }
    if (c == ';') return ++pos_, Token{Kind::Semi, ";", start};
    if (c == '{') return ++pos_, Token{Kind::LBrace, "{", start};
    if (c == '}') return ++pos_, Token{Kind::RBrace, "}", start};
    if (c == '=') return ++pos_, Token{Kind::Equals, "=", start};
    if (c == ',') return ++pos_, Token{Kind::Comma, ",", start};
    if (c == '[') {
      // Attribute lists carry nothing we use.
      while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
      if (pos_ >= text_.size()) throw ParseError("unterminated attribute list", start);
      ++pos_;
      return next();
    }
    if (c == '"') {
      ++pos_;
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        s += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated string", start);
      ++pos_;
      return {Kind::Id, s, start};
    }
    if (is_name_char(c)) {
      while (pos_ < text_.size() && (is_name_char(text_[pos_]) || text_[pos_] == '.')) ++pos_;
      return {Kind::Id, std::string(text_.substr(start, pos_ - start)), start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++pos_;
      } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        const auto close = text_.find("*/", pos_ + 2);
        pos_ = close == std::string_view::npos ? text_.size() : close + 2;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Digraph parse_dot(std::string_view text) {
  using Kind = DotLexer::Kind;
  DotLexer lex(text);
  auto tok = lex.next();
  if (tok.kind == Kind::Id && tok.text == "strict") tok = lex.next();
  if (tok.kind != Kind::Id || tok.text != "digraph") throw ParseError("expected 'digraph'", tok.pos);
  tok = lex.next();
  if (tok.kind == Kind::Id) tok = lex.next();
  if (tok.kind != Kind::LBrace) throw ParseError("expected '{'", tok.pos);

  Digraph g;
  tok = lex.next();
  while (tok.kind != Kind::RBrace) {
    if (tok.kind == Kind::End) throw ParseError("expected '}'", tok.pos);
    if (tok.kind == Kind::Semi || tok.kind == Kind::Comma) {
      tok = lex.next();
      continue;
    }
    if (tok.kind != Kind::Id) throw ParseError("expected a node or edge statement", tok.pos);
    std::vector<std::string> chain{tok.text};
    tok = lex.next();
    if (tok.kind == Kind::Equals) {  // graph attribute a = b
      tok = lex.next();
      if (tok.kind != Kind::Id) throw ParseError("expected attribute value", tok.pos);
      tok = lex.next();
      continue;
    }
    while (tok.kind == Kind::Arrow) {
      tok = lex.next();
      if (tok.kind != Kind::Id) throw ParseError("expected a node after '->'", tok.pos);
      chain.push_back(tok.text);
      tok = lex.next();
    }
    if (chain.size() == 1) {
      const auto& s = chain.front();
      if (s != "graph" && s != "node" && s != "edge") g.add_vertex(s);
    } else {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) g.add_edge(chain[i], chain[i + 1]);
    }
  }
  tok = lex.next();
  if (tok.kind != Kind::End) throw ParseError("unexpected input after '}'", tok.pos);
  return g;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

void check_name(std::string_view name, std::size_t pos, std::size_t line) {
  if (name.empty() || !std::all_of(name.begin(), name.end(), is_name_char)) {
    throw ParseError("line " + std::to_string(line) + ": invalid vertex name '" + std::string(name) + "'", pos);
  }
}

Digraph parse_edge_list(std::string_view text) {
  Digraph g;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset <= text.size()) {
    const auto nl = text.find('\n', offset);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(offset, end - offset);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string_view body = trim(line);
    const std::size_t pos = offset + static_cast<std::size_t>(body.data() - line.data());
    if (!body.empty()) {
      if (const auto arrow = body.find("->"); arrow != std::string_view::npos) {
        const auto u = trim(body.substr(0, arrow));
        const auto v = trim(body.substr(arrow + 2));
        check_name(u, pos, line_no);
        check_name(v, pos + arrow + 2, line_no);
        g.add_edge(u, v);
      } else if (body.starts_with("vertex") && body.size() > 6 &&
                 std::isspace(static_cast<unsigned char>(body[6])) != 0) {
        const auto name = trim(body.substr(6));
        check_name(name, pos + 6, line_no);
        g.add_vertex(name);
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'u -> v' or 'vertex u'", pos);
      }
    }
    if (nl == std::string_view::npos) break;
    offset = nl + 1;
  }
  return g;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.starts_with("digraph") || body.starts_with("strict")) return parse_dot(text);
  return parse_edge_list(text);
}

Digraph load_digraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

std::string format_digraph(const Digraph& g) {
  std::string out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.out(v).empty() && g.in(v).empty()) out += "vertex " + g.name(v) + "\n";
  }
  for (const auto& [u, v] : g.edges()) out += g.name(u) + " -> " + g.name(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Strongly connected components (iterative Tarjan)

SccDecomposition scc_decompose(const Digraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  SccDecomposition scc;
  scc.component.assign(n, -1);
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  int counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < g.size(); ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!frames.empty()) {
      auto& f = frames.back();
      const auto fv = static_cast<std::size_t>(f.v);
      const auto succ = g.out(f.v);
      if (f.next < succ.size()) {
        const Vertex w = succ[f.next++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          index[wi] = low[wi] = counter++;
          stack.push_back(w);
          on_stack[wi] = true;
          frames.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[fv] = std::min(low[fv], index[wi]);
        }
        continue;
      }
      if (low[fv] == index[fv]) {
        const int id = scc.count();
        std::vector<Vertex> members;
        Vertex w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          scc.component[static_cast<std::size_t>(w)] = id;
          members.push_back(w);
        } while (w != f.v);
        std::sort(members.begin(), members.end());
        scc.nontrivial.push_back(members.size() >= 2 || g.has_edge(members.front(), members.front()));
        scc.members.push_back(std::move(members));
      }
      const Vertex done = f.v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto pv = static_cast<std::size_t>(frames.back().v);
        low[pv] = std::min(low[pv], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  return scc;
}

// ---------------------------------------------------------------------------
// Whirls

int WhirlStructure::block_of(Vertex v) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), v)) return static_cast<int>(i);
  }
  return -1;
}

std::optional<WhirlStructure> whirl_structure(const Digraph& g, const SccDecomposition& scc, int component) {
  const auto& members = scc.members[static_cast<std::size_t>(component)];
  if (!scc.nontrivial[static_cast<std::size_t>(component)]) return std::nullopt;

  // In a whirl the blocks are exactly the classes of equal out-neighbourhood
  // within the component, and each class points at its successor class.
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_out;
  std::vector<std::vector<Vertex>> out_within(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex w : g.out(members[i])) {
      if (scc.component[static_cast<std::size_t>(w)] == component) out_within[i].push_back(w);
    }
    by_out[out_within[i]].push_back(members[i]);
  }
  std::map<std::vector<Vertex>, const std::vector<Vertex>*> successor;  // class -> next class
  for (const auto& [out, cls] : by_out) {
    auto it = std::find_if(by_out.begin(), by_out.end(), [&](const auto& kv) { return kv.second == out; });
    if (it == by_out.end()) return std::nullopt;
    successor[cls] = &it->second;
  }

  WhirlStructure whirl;
  const std::vector<Vertex>* current = &by_out.at(out_within.front());
  std::set<const std::vector<Vertex>*> seen;
  while (seen.insert(current).second) {
    whirl.blocks.push_back(*current);
    current = successor.at(*current);
  }
  if (current != &by_out.at(out_within.front()) || whirl.blocks.size() != by_out.size()) return std::nullopt;
  return whirl;
}

// ---------------------------------------------------------------------------
// GraphAnalysis

GraphAnalysis::GraphAnalysis(Digraph g) : graph_(std::move(g)), scc_(scc_decompose(graph_)) {
  const int n = graph_.size();
  const auto un = static_cast<std::size_t>(n);
  const auto nt = [&](Vertex v) { return scc_.is_nontrivial(v); };

  whirls_.resize(static_cast<std::size_t>(scc_.count()));
  std::int64_t lcm = 1;
  for (int c = 0; c < scc_.count(); ++c) {
    if (!scc_.nontrivial[static_cast<std::size_t>(c)]) continue;
    has_nontrivial_ = true;
    whirls_[static_cast<std::size_t>(c)] = whirl_structure(graph_, scc_, c);
    if (const auto& w = whirls_[static_cast<std::size_t>(c)]) {
      const std::int64_t m = w->period();
      const std::int64_t g = std::gcd(lcm, m);
      if (lcm / g > std::numeric_limits<std::int64_t>::max() / m) throw std::overflow_error("M_G overflows");
      lcm = lcm / g * m;
    } else {
      all_whirls_ = false;
    }
  }

  // Reachability to / from nontrivial components.
  std::vector<bool> reaches_nt(un, false);
  std::vector<bool> reached_from_nt(un, false);
  {
    std::vector<Vertex> work;
    for (Vertex v = 0; v < n; ++v) {
      if (nt(v)) {
        reaches_nt[static_cast<std::size_t>(v)] = true;
        work.push_back(v);
      }
    }
    auto fwd = work;
    while (!work.empty()) {
      const Vertex v = work.back();
      work.pop_back();
      for (Vertex u : graph_.in(v)) {
        if (!reaches_nt[static_cast<std::size_t>(u)]) {
          reaches_nt[static_cast<std::size_t>(u)] = true;
          work.push_back(u);
        }
      }
    }
    for (Vertex v : fwd) reached_from_nt[static_cast<std::size_t>(v)] = true;
    while (!fwd.empty()) {
      const Vertex v = fwd.back();
      fwd.pop_back();
      for (Vertex w : graph_.out(v)) {
        if (!reached_from_nt[static_cast<std::size_t>(w)]) {
          reached_from_nt[static_cast<std::size_t>(w)] = true;
          fwd.push_back(w);
        }
      }
    }
  }

  // Component ids are a reverse topological order: successors have smaller ids.
  std::vector<Vertex> order(un);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return scc_.component[static_cast<std::size_t>(a)] < scc_.component[static_cast<std::size_t>(b)];
  });

  walk_from_.assign(un, ExtInt::neg_inf());
  walk_to_.assign(un, ExtInt::neg_inf());
  pleasant_from_.assign(un, ExtInt::neg_inf());
  pleasant_to_.assign(un, ExtInt::neg_inf());
  for (Vertex v : order) {  // sinks first
    const auto vi = static_cast<std::size_t>(v);
    if (reaches_nt[vi]) {
      walk_from_[vi] = ExtInt::pos_inf();
    } else {
      ExtInt best = 0;
      for (Vertex w : graph_.out(v)) best = max(best, walk_from_[static_cast<std::size_t>(w)] + 1);
      walk_from_[vi] = best;
    }
    if (!nt(v)) {
      ExtInt best = 0;
      for (Vertex w : graph_.out(v)) {
        if (!nt(w)) best = max(best, pleasant_from_[static_cast<std::size_t>(w)] + 1);
      }
      pleasant_from_[vi] = best;
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {  // sources first
    const Vertex v = *it;
    const auto vi = static_cast<std::size_t>(v);
    if (reached_from_nt[vi]) {
      walk_to_[vi] = ExtInt::pos_inf();
    } else {
      ExtInt best = 0;
      for (Vertex u : graph_.in(v)) best = max(best, walk_to_[static_cast<std::size_t>(u)] + 1);
      walk_to_[vi] = best;
    }
    if (!nt(v)) {
      ExtInt best = 0;
      for (Vertex u : graph_.in(v)) {
        if (!nt(u)) best = max(best, pleasant_to_[static_cast<std::size_t>(u)] + 1);
      }
      pleasant_to_[vi] = best;
    }
  }

  // A path between distinct nontrivial components.
  for (int c = 0; c < scc_.count() && no_scc_path_; ++c) {
    if (!scc_.nontrivial[static_cast<std::size_t>(c)]) continue;
    std::vector<bool> seen(un, false);
    std::vector<Vertex> work(scc_.members[static_cast<std::size_t>(c)]);
    for (Vertex v : work) seen[static_cast<std::size_t>(v)] = true;
    while (!work.empty() && no_scc_path_) {
      const Vertex v = work.back();
      work.pop_back();
      for (Vertex w : graph_.out(v)) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        if (nt(w) && scc_.component[static_cast<std::size_t>(w)] != c) no_scc_path_ = false;
        work.push_back(w);
      }
    }
  }

  // Parameters.
  GraphParams& p = params_;
  p.M = lcm;
  for (Vertex v = 0; v < n; ++v) p.P = max(p.P, pleasant_from_[static_cast<std::size_t>(v)]);

  if (has_nontrivial_) {
    p.E = 0;
    p.O = 0;
  }
  for (const auto& [u, v] : graph_.edges()) {
    if (!nt(u) && nt(v)) p.E = max(p.E, pleasant_to_[static_cast<std::size_t>(u)] + 1);
    if (nt(u) && !nt(v)) p.O = max(p.O, pleasant_from_[static_cast<std::size_t>(v)] + 1);
  }

  // Z_G: u, w in one block of a whirl, u -> v0 but not w -> v0.
  for (int c = 0; c < scc_.count(); ++c) {
    const auto& whirl = whirls_[static_cast<std::size_t>(c)];
    if (!whirl) continue;
    for (const auto& block : whirl->blocks) {
      for (Vertex u : block) {
        for (Vertex v0 : graph_.out(u)) {
          const bool missed = std::any_of(block.begin(), block.end(), [&](Vertex w) { return !graph_.has_edge(w, v0); });
          if (missed) p.Z = max(p.Z, walk_from_[static_cast<std::size_t>(v0)]);
        }
      }
    }
  }

  // B_G: a vertex with out-neighbours in two distinct nontrivial components.
  for (Vertex v = 0; v < n; ++v) {
    std::set<int> targets;
    for (Vertex w : graph_.out(v)) {
      if (nt(w)) targets.insert(scc_.component[static_cast<std::size_t>(w)]);
    }
    if (targets.size() >= 2) p.B = max(p.B, walk_to_[static_cast<std::size_t>(v)]);
  }

  // lambda_G over entryways of maximal length E_G >= 1, last step p -> k.
  if (p.E.is_finite() && p.E.value() >= 1) {
    for (const auto& [pre, k] : graph_.edges()) {
      if (nt(pre) || !nt(k) || pleasant_to_[static_cast<std::size_t>(pre)] + 1 != p.E) continue;
      const int c = scc_.component[static_cast<std::size_t>(k)];
      for (Vertex w : graph_.in(k)) {
        if (scc_.component[static_cast<std::size_t>(w)] != c) continue;
        for (Vertex v0 = 0; v0 < n; ++v0) {
          if (graph_.has_edge(w, v0) != graph_.has_edge(pre, v0)) {
            p.lambda = max(p.lambda, walk_from_[static_cast<std::size_t>(v0)]);
          }
        }
      }
    }
  }
}

ExtInt GraphAnalysis::omega(int ell, int r) const {
  if (r < 1 || r > ell) throw std::invalid_argument("omega_G(l, r) requires 1 <= r <= l");
  {
    std::lock_guard lock(omega_mutex_);
    if (auto it = omega_memo_.find({ell, r}); it != omega_memo_.end()) return it->second;
  }
  const ExtInt value = compute_omega(ell, r);
  std::lock_guard lock(omega_mutex_);
  omega_memo_.emplace(std::make_pair(ell, r), value);
  return value;
}

ExtInt GraphAnalysis::compute_omega(int ell, int r) const {
  // Branch vertex x = v_{r-1}: it ends a walk of length r-1 and starts a walk
  // of length ell-r+1 into a nontrivial component. The second walk leaves x
  // and must sit on a trivial vertex y = v'_ell after the same number of steps.
  const auto n = static_cast<std::size_t>(graph_.size());
  auto step_forward = [&](const std::vector<bool>& s) {
    std::vector<bool> next(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (!s[v]) continue;
      for (Vertex w : graph_.out(static_cast<Vertex>(v))) next[static_cast<std::size_t>(w)] = true;
    }
    return next;
  };
  auto step_backward = [&](const std::vector<bool>& s) {
    std::vector<bool> prev(n, false);
    for (std::size_t v = 0; v < n; ++v) {
      if (!s[v]) continue;
      for (Vertex u : graph_.in(static_cast<Vertex>(v))) prev[static_cast<std::size_t>(u)] = true;
    }
    return prev;
  };

  std::vector<bool> ends(n, true);
  for (int i = 0; i < r - 1; ++i) ends = step_forward(ends);
  std::vector<bool> into_nt(n, false);
  for (std::size_t v = 0; v < n; ++v) into_nt[v] = scc_.is_nontrivial(static_cast<Vertex>(v));
  const int tail = ell - r + 1;
  for (int i = 0; i < tail; ++i) into_nt = step_backward(into_nt);

  std::vector<bool> reach(n, false);
  for (std::size_t v = 0; v < n; ++v) reach[v] = ends[v] && into_nt[v];
  for (int i = 0; i < tail; ++i) reach = step_forward(reach);

  ExtInt best = ExtInt::neg_inf();
  for (std::size_t y = 0; y < n; ++y) {
    if (reach[y] && !scc_.is_nontrivial(static_cast<Vertex>(y))) best = max(best, walk_from_[y] + ell);
  }
  return best;
}

// ---------------------------------------------------------------------------

ExtInt longest_walk_from(const Digraph& g, Vertex v) { return GraphAnalysis(g).longest_walk_from(v); }
ExtInt longest_walk_to(const Digraph& g, Vertex v) { return GraphAnalysis(g).longest_walk_to(v); }
GraphParams graph_params(const Digraph& g) { return GraphAnalysis(g).params(); }
ExtInt omega_g(const Digraph& g, int ell, int r) { return GraphAnalysis(g).omega(ell, r); }
bool no_path_between_nontrivial_sccs(const Digraph& g) { return GraphAnalysis(g).no_path_between_nontrivial_sccs(); }
bool all_nontrivial_sccs_are_whirls(const Digraph& g) { return GraphAnalysis(g).all_nontrivial_sccs_are_whirls(); }

}  // namespace assoc
