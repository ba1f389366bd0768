#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "raagsplit/cli.hpp"
#include "raagsplit/report.hpp"

using namespace raagsplit;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const {
    const auto brace = out.find('{');
    REQUIRE(brace != std::string::npos);
    return Json::parse(out.substr(brace));
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(RAAGSPLIT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("decide") {
  const Run yes = run({"decide", "-n", "2", fixture("p2.json")});
  CHECK(yes.code == kExitYes);
  CHECK(yes.out.rfind("yes (star-split)\n", 0) == 0);
  const Json j = yes.json();
  CHECK(j["tool"] == "raagsplit");
  CHECK(j["command"] == "decide");
  CHECK(j["result"]["answer"] == "yes");
  CHECK(j["result"]["witness"]["clique"] == Json::array({"a", "b"}));
  CHECK(j["result"]["witness"]["separator"] == Json::array({"b"}));

  const Run no = run({"--json", "decide", "-n", "5", fixture("p2.json")});
  CHECK(no.code == kExitNo);
  CHECK(no.out.front() == '{');
  CHECK(no.json()["result"]["answer"] == "no");
  CHECK(no.json()["result"]["witness"].is_null());
}

TEST_CASE("spectrum, ccd, present") {
  CHECK(run({"--json", "spectrum", fixture("c4.json")}).json()["result"]["spectrum"] ==
        Json::array());
  CHECK(run({"--json", "spectrum", fixture("p2.dot")}).json()["result"]["spectrum"] ==
        Json::array({1, 2}));

  const auto dot_path = std::filesystem::temp_directory_path() / "raagsplit_test_ccd.dot";
  const Run ccd = run({"--json", "ccd", fixture("triangle_pendant.edges"), "--dot", dot_path.string()});
  CHECK(ccd.code == 0);
  const Json r = ccd.json()["result"];
  CHECK(r["tree"]["pieces"] == Json::parse(R"([["a","b","c"],["a","d"]])"));
  CHECK(r["validation"]["passed"] == true);
  std::ifstream dot(dot_path);
  std::stringstream text;
  text << dot.rdbuf();
  CHECK(text.str().rfind("graph", 0) == 0);
  std::filesystem::remove(dot_path);

  const Run p = run({"present", fixture("p2.edges")});
  CHECK(p.out.rfind("<a, b, c | [a,b], [b,c]>\n", 0) == 0);
}

TEST_CASE("star-split and witness") {
  const Run s = run({"--json", "star-split", "-u", "a", fixture("p2.json")});
  CHECK(s.code == 0);
  CHECK(s.json()["result"]["verified"] == true);
  CHECK(run({"star-split", "-u", "b", fixture("p2.json")}).code == kExitInputError);
  CHECK(run({"star-split", "-u", "zz", fixture("p2.json")}).code == kExitInputError);

  const Run w = run({"--json", "witness", "-n", "1", fixture("triangle_pendant.edges")});
  CHECK(w.json()["result"]["amalgam"]["edge_generators"] == Json::array({"a"}));
  const Run hnn = run({"--json", "witness", "-n", "3", fixture("k4.json")});
  CHECK(hnn.json()["result"]["witness"]["kind"] == "hnn-complete");
  CHECK(hnn.json()["result"]["amalgam"].is_null());
}

TEST_CASE("lattice") {
  const Run l = run({"--json", "lattice", fixture("lattice_line.json")});
  CHECK(l.code == 0);
  CHECK(l.json()["result"]["report"]["deep_components"] == 2);
  CHECK(l.json()["result"]["verdict"] == "separates");
  CHECK(run({"--json", "lattice", fixture("lattice_axis_in_z3.json")})
            .json()["result"]["report"]["deep_components"] == 1);
}

TEST_CASE("input and usage errors exit 2") {
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"decide", fixture("p2.json")}).code == kExitInputError);
  CHECK(run({"decide", "-n", "2", "--bogus", fixture("p2.json")}).code == kExitInputError);
  CHECK(run({"--format", "gml", "spectrum", fixture("p2.json")}).code == kExitInputError);
  CHECK(run({"decide", "-n", "-1", fixture("p2.json")}).code == kExitInputError);
  const Run missing = run({"spectrum", "/nonexistent/graph.json"});
  CHECK(missing.code == kExitInputError);
  CHECK(missing.err.rfind("error: ", 0) == 0);
  CHECK(run({"ccd", fixture("two_isolated.json")}).code == kExitInputError);
  CHECK(run({"--format", "dot", "spectrum", fixture("p2.json")}).code == kExitInputError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("format flag overrides the extension") {
  const Run r = run({"--json", "--format", "edge-list", "spectrum", fixture("p2.edges")});
  CHECK(r.code == 0);
  CHECK(r.json()["arguments"]["format"] == "edge-list");
}

TEST_CASE("vertex cap from the environment") {
  ::setenv("RAAGSPLIT_MAX_VERTICES", "2", 1);
  CHECK(run({"spectrum", fixture("p2.json")}).code == kExitInputError);
  ::setenv("RAAGSPLIT_MAX_VERTICES", "3", 1);
  CHECK(run({"spectrum", fixture("p2.json")}).code == 0);
  ::unsetenv("RAAGSPLIT_MAX_VERTICES");
}

TEST_CASE("reports are byte-stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "witness", "-n", "2", fixture("bowtie.dot")},
           {"--json", "ccd", fixture("bowtie.dot")},
           {"--json", "lattice", fixture("lattice_diagonal.json")}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("generate is seeded") {
  const Run a = run({"generate", "--vertices", "7", "--seed", "11"});
  const Run b = run({"generate", "--vertices", "7", "--seed", "11"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["vertices"].size() == 7);
  CHECK(run({"generate", "--vertices", "7", "--seed", "12"}).out != a.out);
  CHECK(run({"generate", "--format", "dot", "--vertices", "3"}).out.rfind("graph", 0) == 0);
}
