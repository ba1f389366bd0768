#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "raagsplit/error.hpp"
#include "raagsplit/io.hpp"
#include "raagsplit/report.hpp"

using namespace raagsplit;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(RAAGSPLIT_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr GraphFormat kFormats[] = {GraphFormat::json, GraphFormat::edge_list, GraphFormat::dot};

}  // namespace

TEST_CASE("parse_graph in each format") {
  const Graph p2 = fixtures::p2();
  CHECK(parse_graph(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})",
                    GraphFormat::json) == p2);
  CHECK(parse_graph("a b\nb c", GraphFormat::edge_list) == p2);
  CHECK(parse_graph("graph { a -- b -- c; }", GraphFormat::dot) == p2);
  CHECK(parse_graph("graph P2 {\n  a; b; c;\n  a -- b\n  b -- c\n}\n", GraphFormat::dot) == p2);
  CHECK(parse_graph("# comment\na b  # trailing\n\nb c\n", GraphFormat::edge_list) == p2);
  CHECK(parse_graph("a\nb\nc\na b\nb c\n", GraphFormat::edge_list) == p2);

  const Graph quoted = parse_graph("graph { \"x y\" -- \"z\"; // note\n }", GraphFormat::dot);
  CHECK(quoted.labels() == std::vector<std::string>{"x y", "z"});
  CHECK(quoted.edge_count() == 1);
}

TEST_CASE("fixture files parse to the expected graphs") {
  CHECK(parse_graph(slurp("p2.json"), GraphFormat::json) == fixtures::p2());
  CHECK(parse_graph(slurp("p2.edges"), GraphFormat::edge_list) == fixtures::p2());
  CHECK(parse_graph(slurp("p2.dot"), GraphFormat::dot) == fixtures::p2());
  CHECK(parse_graph(slurp("triangle_pendant.edges"), GraphFormat::edge_list) ==
        fixtures::triangle_pendant());
  CHECK(parse_graph(slurp("two_isolated.json"), GraphFormat::json) == fixtures::two_isolated());
  CHECK(parse_graph(slurp("k2_plus_k1.edges"), GraphFormat::edge_list) == fixtures::k2_plus_k1());
  const Graph c5 = parse_graph(slurp("c5.dot"), GraphFormat::dot);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(clique_number(c5) == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_graph("graph { a -- a; }", GraphFormat::dot), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("a a", GraphFormat::edge_list), InvalidArgument);
  CHECK_THROWS_AS(parse_graph("a b\nb a", GraphFormat::edge_list), InvalidArgument);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","a"],"edges":[]})", GraphFormat::json),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","b"]]})", GraphFormat::json),
                  InvalidVertex);
  CHECK(parse_graph(R"({"vertices":["a"]})", GraphFormat::json).vertex_count() == 1);
  CHECK_THROWS_AS(parse_graph(R"({"edges":[]})", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a"]]})", GraphFormat::json),
                  ParseError);
  CHECK_THROWS_AS(parse_graph("{", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph("digraph { a -> b; }", GraphFormat::dot), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { a -- b [color=red]; }", GraphFormat::dot), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { a -- ; }", GraphFormat::dot), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { a -- b; ", GraphFormat::dot), ParseError);

  try {
    parse_graph("a b\nb c d\n", GraphFormat::edge_list);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 1);
  }
  try {
    parse_graph("graph {\n  a -- b;\n  c -> d;\n}", GraphFormat::dot);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("serialize then parse is the identity") {
  std::vector<Graph> graphs{fixtures::p2(), fixtures::triangle_pendant(), fixtures::two_isolated(),
                            fixtures::k2_plus_k1(), complete_graph(5), cycle_graph(6), Graph{}};
  for (const char* name : {"p2.json", "c4.json", "k4.json", "k1.json", "two_isolated.json"}) {
    graphs.push_back(parse_graph(slurp(name), GraphFormat::json));
  }
  graphs.push_back(parse_graph(slurp("bowtie.dot"), GraphFormat::dot));
  graphs.push_back(parse_graph(slurp("c5.dot"), GraphFormat::dot));
  for (std::size_t m = 0; m <= 4; ++m) {
    oracle::for_each_graph(m, false, [&](const Graph& g) { graphs.push_back(g); });
  }
  for (const auto& g : graphs) {
    for (GraphFormat f : kFormats) {
      const std::string text = serialize_graph(g, f);
      CHECK(parse_graph(text, f) == g);
      CHECK(serialize_graph(parse_graph(text, f), f) == text);
    }
  }

  const Graph odd = fixtures::make({"x y", "q\"uote", "-1"}, {{"x y", "q\"uote"}});
  CHECK(parse_graph(serialize_graph(odd, GraphFormat::json), GraphFormat::json) == odd);
  CHECK(parse_graph(serialize_graph(odd, GraphFormat::dot), GraphFormat::dot) == odd);
  CHECK_THROWS_AS(serialize_graph(odd, GraphFormat::edge_list), InvalidArgument);
}

TEST_CASE("format names") {
  CHECK(format_from_path("x/y.json") == GraphFormat::json);
  CHECK(format_from_path("g.dot") == GraphFormat::dot);
  CHECK(format_from_path("g.gv") == GraphFormat::dot);
  CHECK(format_from_path("g.txt") == GraphFormat::edge_list);
  CHECK(format_from_string("edge-list") == GraphFormat::edge_list);
  CHECK_FALSE(format_from_string("gml"));
  CHECK(to_string(GraphFormat::dot) == "dot");
}

TEST_CASE("parse_scenario") {
  const LatticeScenario line = parse_scenario(slurp("lattice_line.json"));
  CHECK(line.ambient_rank == 2);
  CHECK(std::get<Subgroup>(line.subset).generators == std::vector<LatticePoint>{{1, 0}});
  CHECK(line.box_radius == 32);
  CHECK(line.depth == 8);

  const LatticeScenario half = parse_scenario(slurp("lattice_half_plane.json"));
  CHECK(std::get<SubsetShape>(half.subset) == SubsetShape::half_hyperplane);
  CHECK(half.box_radius == 16);

  const LatticeScenario defaults = parse_scenario(R"({"ambient_rank": 3, "generators": []})");
  CHECK(defaults.thickening == 1);

  CHECK_THROWS_AS(parse_scenario(R"({"generators": []})"), InvalidArgument);
  CHECK_THROWS_AS(parse_scenario(R"({"ambient_rank": 2})"), InvalidArgument);
  CHECK_THROWS_AS(parse_scenario(R"({"ambient_rank": 2, "subset": "blob"})"), InvalidArgument);
  CHECK_THROWS_AS(
      parse_scenario(R"({"ambient_rank": 2, "subset": "line", "generators": [[1, 0]]})"),
      InvalidArgument);
  CHECK_THROWS_AS(parse_scenario("[1, 2"), ParseError);
}

TEST_CASE("ccd_to_dot and digests") {
  const Graph p2 = fixtures::p2();
  const std::string dot = ccd_to_dot(p2, complete_cut_decomposition(p2));
  CHECK(dot.find("{a,b}") != std::string::npos);
  CHECK(dot.find("{b,c}") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);

  CHECK(input_digest("") ==
        "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(input_digest("abc") ==
        "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
