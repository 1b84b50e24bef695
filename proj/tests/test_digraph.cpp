#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "assoc/digraph.hpp"
#include "assoc/errors.hpp"
#include "fixtures.hpp"

using namespace assoc;

namespace {

const ExtInt kNeg = ExtInt::neg_inf();
const ExtInt kPos = ExtInt::pos_inf();

Vertex id(const Digraph& g, const char* name) { return g.find(name).value(); }

}  // namespace

TEST_CASE("ExtInt ordering and text") {
  CHECK(kNeg < ExtInt(-1000));
  CHECK(ExtInt(5) < kPos);
  CHECK(kNeg < kPos);
  CHECK(ExtInt(3) + 2 == ExtInt(5));
  CHECK(kPos + 7 == kPos);
  CHECK(kNeg.to_string() == "-inf");
  CHECK(ExtInt::parse("inf") == kPos);
  CHECK(ExtInt::parse("-4") == ExtInt(-4));
  CHECK_THROWS(kPos.value());
}

TEST_CASE("edge list format") {
  const auto g = parse_digraph("# comment\nvertex z\na -> b   # trailing\n\nb -> a\n");
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(id(g, "a"), id(g, "b")));
  CHECK(g.out(id(g, "z")).empty());
  CHECK(parse_digraph(format_digraph(g)).edge_count() == 2);
  CHECK_THROWS_AS(parse_digraph("a -> \n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("a => b\n"), ParseError);
  CHECK_THROWS_AS(parse_digraph("a-b -> c\n"), ParseError);
  try {
    parse_digraph("a -> b\nb -> ?\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("DOT subset") {
  const auto g = parse_digraph("digraph G {\n  node [shape=circle];\n  a -> b -> c [color=red];\n  \"d\";\n  c -> a\n}\n");
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(id(g, "b"), id(g, "c")));
  CHECK_THROWS_AS(parse_digraph("digraph { a -> }"), ParseError);
}

TEST_CASE("strongly connected components") {
  const Digraph cycle(2, {{0, 1}, {1, 0}});
  auto s = scc_decompose(cycle);
  CHECK(s.count() == 1);
  CHECK(s.is_nontrivial(0));

  const Digraph loop(1, {{0, 0}});
  CHECK(scc_decompose(loop).is_nontrivial(0));

  const Digraph edge(2, {{0, 1}});
  s = scc_decompose(edge);
  CHECK(s.count() == 2);
  CHECK_FALSE(s.is_nontrivial(0));
  CHECK_FALSE(s.is_nontrivial(1));
  // reverse topological numbering
  CHECK(s.component[0] > s.component[1]);
}

TEST_CASE("whirls") {
  const Digraph cycle(2, {{0, 1}, {1, 0}});
  auto s = scc_decompose(cycle);
  auto w = whirl_structure(cycle, s, 0);
  REQUIRE(w);
  CHECK(w->period() == 2);
  CHECK(w->blocks[0] == std::vector<Vertex>{0});

  const Digraph loop(1, {{0, 0}});
  s = scc_decompose(loop);
  REQUIRE(whirl_structure(loop, s, 0));
  CHECK(whirl_structure(loop, s, 0)->period() == 1);

  const Digraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(all_nontrivial_sccs_are_whirls(tri));
  // a triangle with one chord is strongly connected but not a whirl
  const Digraph chord(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  CHECK_FALSE(all_nontrivial_sccs_are_whirls(chord));

  const auto fig = fixtures::two_whirl_graph();
  const GraphAnalysis a(fig);
  std::vector<int> periods;
  for (int c = 0; c < a.scc().count(); ++c) {
    if (!a.scc().nontrivial[static_cast<std::size_t>(c)]) continue;
    REQUIRE(a.whirl(c));
    periods.push_back(a.whirl(c)->period());
    const auto& blocks = a.whirl(c)->blocks;
    CHECK(blocks[0].front() == a.scc().members[static_cast<std::size_t>(c)].front());
  }
  std::sort(periods.begin(), periods.end());
  CHECK(periods == std::vector<int>{3, 4});
  CHECK(a.all_nontrivial_sccs_are_whirls());
  CHECK(a.no_path_between_nontrivial_sccs());
}

TEST_CASE("whirl blocks follow relabelling") {
  // 3-whirl with blocks {0}, {1,2}, {3} under two labellings
  const Digraph g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 0}});
  const Digraph h(4, {{3, 2}, {3, 0}, {2, 1}, {0, 1}, {1, 3}});  // 0->3, 1->2, 2->0, 3->1
  const auto sg = scc_decompose(g);
  const auto sh = scc_decompose(h);
  const auto wg = whirl_structure(g, sg, 0).value();
  const auto wh = whirl_structure(h, sh, 0).value();
  CHECK(wg.blocks == std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3}});
  CHECK(wh.blocks == std::vector<std::vector<Vertex>>{{0, 2}, {1}, {3}});
  CHECK(wg.period() == wh.period());
}

TEST_CASE("paths between nontrivial components") {
  const Digraph two_loops(2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK_FALSE(no_path_between_nontrivial_sccs(two_loops));
  const Digraph via(3, {{0, 0}, {2, 2}, {0, 1}, {1, 2}});
  CHECK_FALSE(no_path_between_nontrivial_sccs(via));
  const Digraph apart(3, {{0, 0}, {2, 2}, {1, 0}, {1, 2}});
  CHECK(no_path_between_nontrivial_sccs(apart));
}

TEST_CASE("longest walks") {
  const Digraph edge(2, {{0, 1}});
  CHECK(longest_walk_from(edge, 0) == ExtInt(1));
  CHECK(longest_walk_from(edge, 1) == ExtInt(0));
  CHECK(longest_walk_to(edge, 1) == ExtInt(1));
  const Digraph loop(1, {{0, 0}});
  CHECK(longest_walk_from(loop, 0) == kPos);

  const auto fig = fixtures::two_whirl_graph();
  CHECK(longest_walk_from(fig, id(fig, "o0")) == kPos);
  CHECK(longest_walk_from(fig, id(fig, "o1")) == ExtInt(2));
  CHECK(longest_walk_to(fig, id(fig, "p9")) == ExtInt(9));
  CHECK(longest_walk_to(fig, id(fig, "c")) == kPos);
}

TEST_CASE("graph parameters of small graphs") {
  const auto edge = graph_params(Digraph(2, {{0, 1}}));
  CHECK(edge.M == 1);
  CHECK(edge.P == ExtInt(1));
  for (const ExtInt& v : {edge.E, edge.O, edge.Z, edge.B, edge.lambda}) CHECK(v == kNeg);

  const auto cycle = graph_params(Digraph(2, {{0, 1}, {1, 0}}));
  CHECK(cycle.M == 2);
  CHECK(cycle.P == kNeg);
  CHECK(cycle.E == ExtInt(0));
  CHECK(cycle.O == ExtInt(0));
  for (const ExtInt& v : {cycle.Z, cycle.B, cycle.lambda}) CHECK(v == kNeg);

  const auto empty = graph_params(Digraph(0));
  CHECK(empty.M == 1);
  CHECK(empty.P == kNeg);
}

TEST_CASE("two-whirl fixture parameters") {
  const GraphAnalysis a(fixtures::two_whirl_graph());
  const auto& p = a.params();
  CHECK(p.M == 12);
  CHECK(p.P == ExtInt(9));
  CHECK(p.E == ExtInt(4));
  CHECK(p.O == ExtInt(3));
  CHECK(p.Z == ExtInt(1));
  CHECK(p.B == ExtInt(2));
  CHECK(p.lambda == ExtInt(1));
  CHECK(a.omega(1, 1) == ExtInt(3));
  CHECK(a.omega(4, 2) == ExtInt(8));
  CHECK(a.omega(7, 3) == ExtInt(9));
  CHECK(a.omega(9, 1) == ExtInt(11));
  for (int ell = 1; ell <= 8; ++ell) {
    for (int r = 1; r <= ell; ++r) {
      CHECK(a.omega(ell, r) ==
            ExtInt(fixtures::kTwoWhirlOmega[static_cast<std::size_t>(ell - 1)][static_cast<std::size_t>(r - 1)]));
    }
  }
  // every whirl period divides M_G
  for (int c = 0; c < a.scc().count(); ++c) {
    if (a.whirl(c)) CHECK(12 % a.whirl(c)->period() == 0);
  }
  CHECK_THROWS_AS(a.omega(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(a.omega(2, 0), std::invalid_argument);
}

TEST_CASE("omega_G on a 2-cycle") { CHECK(omega_g(Digraph(2, {{0, 1}, {1, 0}}), 1, 1) == kNeg); }

TEST_CASE("parameters agree with walk search on every graph with at most 3 vertices") {
  int graphs = 0;
  for (const auto& g : fixtures::all_small_graphs(3)) {
    ++graphs;
    const GraphAnalysis a(g);
    const fixtures::Reference ref(g);
    const auto want = ref.params();
    const auto& got = a.params();
    INFO("graph ", format_digraph(g));
    CHECK(got.M == want.M);
    CHECK(got.P == want.P);
    CHECK(got.E == want.E);
    CHECK(got.O == want.O);
    if (a.all_nontrivial_sccs_are_whirls()) CHECK(got.Z == want.Z);
    CHECK(got.B == want.B);
    CHECK(got.lambda == want.lambda);
    for (Vertex v = 0; v < g.size(); ++v) {
      CHECK(a.longest_walk_from(v) == ref.walk_from(v));
      CHECK(a.longest_walk_to(v) == ref.walk_to(v));
    }
    for (int ell = 1; ell <= 5; ++ell) {
      for (int r = 1; r <= ell; ++r) {
        CHECK(a.omega(ell, r) == ref.omega(ell, r));
        // lower bound from the outlet length
        if (got.O.is_finite() && got.O.value() >= 1) CHECK(a.omega(ell, r) >= got.O + (ell - 1));
      }
    }
    // E_G >= 0 iff O_G >= 0 iff there is a nontrivial component
    CHECK((got.E >= ExtInt(0)) == a.has_nontrivial_scc());
    CHECK((got.O >= ExtInt(0)) == a.has_nontrivial_scc());
    CHECK(got.P < kPos);
  }
  CHECK(graphs == 531);
}

TEST_CASE("omega_G lower bound on the fixture") {
  const GraphAnalysis a(fixtures::two_whirl_graph());
  const ExtInt o = a.params().O;
  for (int ell = 1; ell <= 10; ++ell) {
    for (int r = 1; r <= ell; ++r) CHECK(a.omega(ell, r) >= o + (ell - 1));
  }
}
