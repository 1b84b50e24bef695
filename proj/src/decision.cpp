#include "assoc/decision.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace assoc {

namespace {

const char* const kLabels[kConditionCount] = {"(i)", "(ii)", "(iii)", "(iv)", "(v)",
                                              "(vi)", "(vii)", "(viii)", "(ix)", "(x)"};

ConditionResult make(int number, std::string lhs, std::string relation, std::string rhs, bool passed) {
  return ConditionResult{number, kLabels[number - 1], std::move(lhs), std::move(relation), std::move(rhs), passed};
}

std::string str(const ExtInt& v) { return v.to_string(); }

// First r in 1..L+1 where omega_G(L+1, r) >= omega(r), or 0.
int first_omega_violation(const GraphAnalysis& g, const PairParams& p) {
  const int ell = p.L + 1;
  for (int r = 1; r <= ell; ++r) {
    if (!(g.omega(ell, r) < ExtInt(p.omega(r)))) return r;
  }
  return 0;
}

std::vector<ConditionResult> evaluate(const GraphAnalysis& g, const PairParams& p) {
  const GraphParams& gp = g.params();
  std::vector<ConditionResult> out;
  out.reserve(kConditionCount);

  out.push_back(make(1, g.all_nontrivial_sccs_are_whirls() ? "all whirls" : "non-whirl component", "", "",
                     g.all_nontrivial_sccs_are_whirls()));
  out.push_back(make(2, g.no_path_between_nontrivial_sccs() ? "no path" : "path exists", "", "",
                     g.no_path_between_nontrivial_sccs()));
  out.push_back(make(3, std::to_string(gp.M), "|", std::to_string(p.M), p.M % gp.M == 0));
  out.push_back(make(4, str(gp.P), "<", std::to_string(p.H), gp.P < ExtInt(p.H)));
  out.push_back(make(5, str(gp.E), "<=", std::to_string(p.L + 1), gp.E <= ExtInt(p.L + 1)));
  out.push_back(make(6, str(gp.O), "<=", std::to_string(p.Y + 1), gp.O <= ExtInt(p.Y + 1)));
  out.push_back(make(7, str(gp.Z), "<", std::to_string(p.Z), gp.Z < ExtInt(p.Z)));
  out.push_back(make(8, str(gp.B), "<", std::to_string(p.L), gp.B < ExtInt(p.L)));

  const int ell = p.L + 1;
  std::ostringstream lhs, rhs;
  for (int r = 1; r <= ell; ++r) {
    if (r > 1) {
      lhs << ',';
      rhs << ',';
    }
    lhs << g.omega(ell, r).to_string();
    rhs << p.omega(r);
  }
  out.push_back(make(9, "omega_G(" + std::to_string(ell) + ",1.." + std::to_string(ell) + ")=(" + lhs.str() + ")", "<",
                     "omega(1.." + std::to_string(ell) + ")=(" + rhs.str() + ")", first_omega_violation(g, p) == 0));

  if (gp.E == ExtInt(p.L + 1)) {
    out.push_back(make(10, str(gp.lambda), "<", std::to_string(p.lambda), gp.lambda < ExtInt(p.lambda)));
  } else {
    out.push_back(make(10, "E_G=" + str(gp.E), "!=", "L+1=" + std::to_string(p.L + 1), true));
  }
  return out;
}

}  // namespace

std::array<bool, kConditionCount> check_conditions(const GraphAnalysis& g, const PairParams& p) {
  const GraphParams& gp = g.params();
  std::array<bool, kConditionCount> ok{};
  ok[0] = g.all_nontrivial_sccs_are_whirls();
  ok[1] = g.no_path_between_nontrivial_sccs();
  ok[2] = p.M % gp.M == 0;
  ok[3] = gp.P < ExtInt(p.H);
  ok[4] = gp.E <= ExtInt(p.L + 1);
  ok[5] = gp.O <= ExtInt(p.Y + 1);
  ok[6] = gp.Z < ExtInt(p.Z);
  ok[7] = gp.B < ExtInt(p.L);
  ok[8] = first_omega_violation(g, p) == 0;
  ok[9] = gp.E != ExtInt(p.L + 1) || gp.lambda < ExtInt(p.lambda);
  return ok;
}

bool identity_holds(const GraphAnalysis& g, const PairParams& p) {
  const auto ok = check_conditions(g, p);
  return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

Decision decide_identity(const GraphAnalysis& g, const DfsTree& t, const DfsTree& u) {
  if (t.size() != u.size()) throw std::invalid_argument("bracketings have different sizes");
  Decision d;
  d.graph = g.params();
  if (t == u) {
    d.satisfied = true;
    d.trivial = true;
    return d;
  }
  d.pair = pair_params(t, u);
  d.conditions = evaluate(g, *d.pair);
  d.satisfied = std::all_of(d.conditions.begin(), d.conditions.end(), [](const ConditionResult& c) { return c.passed; });
  return d;
}

Decision decide_identity(const Digraph& g, const Bracketing& t, const Bracketing& u) {
  if (t.size() != u.size()) throw std::invalid_argument("bracketings have different sizes");
  const GraphAnalysis analysis(g);
  return decide_identity(analysis, bracketing_to_dfs_tree(t), bracketing_to_dfs_tree(u));
}

// ---------------------------------------------------------------------------

AssociativityCheck check_associativity(const Digraph& g) {
  AssociativityCheck check;
  const GraphAnalysis analysis(g);
  const auto t = parse_bracketing("x1(x2x3)");
  const auto u = parse_bracketing("(x1x2)x3");
  check.associative = decide_identity(analysis, bracketing_to_dfs_tree(t), bracketing_to_dfs_tree(u)).satisfied;

  const auto& scc = analysis.scc();
  bool structural = true;
  for (int c = 0; c < scc.count(); ++c) {
    if (!scc.nontrivial[static_cast<std::size_t>(c)]) continue;
    const auto& w = analysis.whirl(c);
    if (!w || w->period() != 1) structural = false;
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto out = g.out(v);
    if (out.empty()) {
      check.edgeless_vertices.push_back(v);
      structural = false;
      continue;
    }
    const int c = scc.component[static_cast<std::size_t>(out.front())];
    const auto& members = scc.members[static_cast<std::size_t>(c)];
    if (!scc.nontrivial[static_cast<std::size_t>(c)] || !std::equal(out.begin(), out.end(), members.begin(), members.end())) {
      structural = false;
    }
  }
  check.structural = structural;
  return check;
}

bool is_associative(const Digraph& g) { return check_associativity(g).associative; }

// ---------------------------------------------------------------------------

std::vector<std::vector<Vertex>> weak_components(const Digraph& g) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.size()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& [a, b] : g.edges()) {
    const Vertex ra = find(a);
    const Vertex rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
  std::map<Vertex, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.size(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> result;
  for (auto& [root, members] : groups) result.push_back(std::move(members));
  return result;
}

bool is_directed_bipartite_with_edge(const Digraph& g) {
  if (g.edge_count() == 0) return false;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.has_edge(v, v)) return false;
    if (!g.out(v).empty() && !g.in(v).empty()) return false;
  }
  return true;
}

namespace {

bool complete_with_loops(const Digraph& g) {
  for (Vertex a = 0; a < g.size(); ++a) {
    if (g.out(a).size() != static_cast<std::size_t>(g.size())) return false;
  }
  return true;
}

// Loopless, 2-colourable, every cross pair adjacent; needs at least one edge.
bool complete_bipartite(const Digraph& g) {
  if (g.size() < 2) return false;
  std::vector<int> side(static_cast<std::size_t>(g.size()), -1);
  side[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.out(v)) {
      if (side[static_cast<std::size_t>(w)] == -1) {
        side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
        stack.push_back(w);
      } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
        return false;
      }
    }
  }
  for (Vertex a = 0; a < g.size(); ++a) {
    for (Vertex b = 0; b < g.size(); ++b) {
      if ((side[static_cast<std::size_t>(a)] != side[static_cast<std::size_t>(b)]) != g.has_edge(a, b)) return false;
    }
  }
  return true;
}

std::string describe(const Digraph& g, const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ",";
    s += g.name(vs[i]);
  }
  return s + "}";
}

}  // namespace

UndirectedClass classify_undirected(const Digraph& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("graph is not symmetric");
  bool bipartite_seen = false;
  for (const auto& comp : weak_components(g)) {
    const Digraph h = g.induced(comp);
    if (h.size() == 1 && h.edge_count() == 0) continue;
    if (complete_with_loops(h)) continue;
    if (complete_bipartite(h)) {
      bipartite_seen = true;
      continue;
    }
    return UndirectedClass::NoIdentities;
  }
  return bipartite_seen ? UndirectedClass::EvenMIdentities : UndirectedClass::AllIdentities;
}

std::string to_string(UndirectedClass c) {
  switch (c) {
    case UndirectedClass::AllIdentities: return "all-identities";
    case UndirectedClass::EvenMIdentities: return "even-M-identities";
    case UndirectedClass::NoIdentities: return "no-identities";
  }
  return "?";
}

SpectrumClass classify_dichotomy(const Digraph& g) {
  SpectrumClass result;
  if (is_associative(g)) {
    result.kind = SpectrumClass::Kind::Constant1;
    result.witness = "x1(x2x3) ~ (x1x2)x3 holds";
    return result;
  }
  std::optional<std::vector<Vertex>> bipartite;
  for (const auto& comp : weak_components(g)) {
    const Digraph h = g.induced(comp);
    if (is_associative(h)) continue;
    if (is_directed_bipartite_with_edge(h)) {
      if (!bipartite) bipartite = comp;
      continue;
    }
    result.kind = SpectrumClass::Kind::Exponential;
    result.component = comp;
    result.witness = "component " + describe(g, comp) + " is neither associative nor directed bipartite";
    return result;
  }
  // A non-associative graph always has a non-associative component.
  result.kind = SpectrumClass::Kind::Constant2;
  result.component = bipartite.value_or(std::vector<Vertex>{});
  result.witness = "directed bipartite component " + describe(g, result.component);
  return result;
}

std::string to_string(SpectrumClass::Kind k) {
  switch (k) {
    case SpectrumClass::Kind::Constant1: return "constant-1";
    case SpectrumClass::Kind::Constant2: return "constant-2";
    case SpectrumClass::Kind::Exponential: return "exponential";
  }
  return "?";
}

}  // namespace assoc
