#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "raagsplit/ccd.hpp"
#include "raagsplit/error.hpp"

using namespace raagsplit;
using fixtures::set;

namespace {

bool has_complete_cut(const Graph& g) {
  for (const auto& s : minimal_clique_separators(g)) {
    if (!s.empty()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("complete graphs are a single piece") {
  for (std::size_t m = 1; m <= 6; ++m) {
    const Graph k = complete_graph(m);
    const CcdTree t = complete_cut_decomposition(k);
    CHECK(t.pieces == std::vector<VertexSet>{k.all_vertices()});
    CHECK(t.edges.empty());
    CHECK(validate_ccd(k, t).passed());
  }
}

TEST_CASE("path and triangle with pendant") {
  const Graph p2 = fixtures::p2();
  const CcdTree t = complete_cut_decomposition(p2);
  REQUIRE(t.pieces.size() == 2);
  CHECK(t.pieces[0] == set(p2, {"a", "b"}));
  CHECK(t.pieces[1] == set(p2, {"b", "c"}));
  CHECK(t.cuts == std::vector<VertexSet>{set(p2, {"b"})});
  CHECK(validate_ccd(p2, t).passed());

  const Graph tp = fixtures::triangle_pendant();
  const CcdTree u = complete_cut_decomposition(tp);
  REQUIRE(u.pieces.size() == 2);
  CHECK(u.pieces[0] == set(tp, {"a", "b", "c"}));
  CHECK(u.pieces[1] == set(tp, {"a", "d"}));
  CHECK(u.cuts == std::vector<VertexSet>{set(tp, {"a"})});
  CHECK(validate_ccd(tp, u).passed());
}

TEST_CASE("validate_ccd flags broken trees") {
  const Graph p2 = fixtures::p2();
  const CcdTree whole{{p2.all_vertices()}, {}, {}};
  const CcdReport r = validate_ccd(p2, whole);
  CHECK(r.well_formed);
  CHECK(r.covers_edges);
  CHECK_FALSE(r.pieces_cut_free);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.problems.empty());

  CHECK(validate_ccd(fixtures::k3(), CcdTree{{VertexSet{0, 1, 2}}, {}, {}}).passed());

  // wrong cut label
  CcdTree bad_cut = complete_cut_decomposition(p2);
  bad_cut.cuts[0] = set(p2, {"a"});
  CHECK_FALSE(validate_ccd(p2, bad_cut).well_formed);

  // an edge missing from every piece
  const CcdTree uncovered{{set(p2, {"a"}), set(p2, {"b", "c"})}, {{0, 1}}, {VertexSet{}}};
  CHECK_FALSE(validate_ccd(p2, uncovered).passed());

  // a cycle among three pieces
  const CcdTree cyclic{{set(p2, {"a", "b"}), set(p2, {"b", "c"}), set(p2, {"b"})},
                       {{0, 1}, {1, 2}, {2, 0}},
                       {set(p2, {"b"}), set(p2, {"b"}), set(p2, {"b"})}};
  CHECK_FALSE(validate_ccd(p2, cyclic).well_formed);

  // out-of-range node index
  const CcdTree dangling{{set(p2, {"a", "b"})}, {{0, 3}}, {VertexSet{}}};
  CHECK_FALSE(validate_ccd(p2, dangling).well_formed);
}

TEST_CASE("disconnected and empty graphs are declined") {
  CHECK_THROWS_AS(complete_cut_decomposition(fixtures::two_isolated()), UnsupportedInput);
  CHECK_THROWS_AS(complete_cut_decomposition(Graph{}), UnsupportedInput);
}

TEST_CASE("graph_of_groups") {
  const Graph p2 = fixtures::p2();
  const GraphOfGroups gp = graph_of_groups(p2, complete_cut_decomposition(p2));
  REQUIRE(gp.vertex_groups.size() == 2);
  CHECK(gp.vertex_groups[0].to_text() == "<a, b | [a,b]>");
  CHECK(gp.vertex_groups[1].to_text() == "<b, c | [b,c]>");
  REQUIRE(gp.edges.size() == 1);
  CHECK(gp.edges[0].group.generators == std::vector<std::string>{"b"});
  CHECK(gp.edges[0].into_source == std::vector<std::size_t>{1});
  CHECK(gp.edges[0].into_target == std::vector<std::size_t>{0});

  const GraphOfGroups k3 = graph_of_groups(fixtures::k3(), complete_cut_decomposition(fixtures::k3()));
  REQUIRE(k3.vertex_groups.size() == 1);
  CHECK(k3.vertex_groups[0].relators.size() == 3);
  CHECK(k3.edges.empty());

  const Graph tp = fixtures::triangle_pendant();
  const GraphOfGroups gt = graph_of_groups(tp, complete_cut_decomposition(tp));
  REQUIRE(gt.vertex_groups.size() == 2);
  CHECK(gt.vertex_groups[0].generators.size() == 3);
  CHECK(gt.vertex_groups[0].relators.size() == 3);
  CHECK(gt.vertex_groups[1].generators.size() == 2);
  REQUIRE(gt.edges.size() == 1);
  CHECK(gt.edges[0].group.generators == std::vector<std::string>{"a"});

  CHECK_THROWS_AS(graph_of_groups(p2, CcdTree{{p2.all_vertices()}, {}, {}}), InvalidArgument);
}

TEST_CASE("random connected graphs decompose validly") {
  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> density(0.0, 0.7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 10;
    const Graph g = random_connected_graph(m, density(rng), rng);
    const CcdTree t = complete_cut_decomposition(g);
    const CcdReport r = validate_ccd(g, t);
    REQUIRE_MESSAGE(r.passed(), (r.problems.empty() ? "" : r.problems.front()));

    VertexSet all;
    for (const auto& p : t.pieces) all = all.united(p);
    CHECK(all == g.all_vertices());
    for (const auto& c : t.cuts) {
      CHECK(is_clique(g, c));
      CHECK(separates(g, c));
    }
    CHECK((t.pieces.size() == 1) == !has_complete_cut(g));

    const GraphOfGroups gg = graph_of_groups(g, t);
    for (const auto& e : gg.edges) {
      const auto& src = gg.vertex_groups[e.source];
      const auto& dst = gg.vertex_groups[e.target];
      for (std::size_t i = 0; i < e.group.generators.size(); ++i) {
        CHECK(src.generators[e.into_source[i]] == e.group.generators[i]);
        CHECK(dst.generators[e.into_target[i]] == e.group.generators[i]);
      }
    }
  }
}
