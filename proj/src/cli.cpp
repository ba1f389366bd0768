#include "raagsplit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "raagsplit/ccd.hpp"
#include "raagsplit/error.hpp"
#include "raagsplit/io.hpp"
#include "raagsplit/lattice.hpp"
#include "raagsplit/presentation.hpp"
#include "raagsplit/report.hpp"
#include "raagsplit/splitting.hpp"

namespace raagsplit {

namespace {

struct Options {
  std::string file;
  std::string format;
  std::string dot_out;
  std::string vertex;
  int rank = 0;
  bool json_only = false;
  std::size_t vertices = 8;
  double density = 0.4;
  std::uint64_t seed = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::size_t max_vertices() {
  const char* raw = std::getenv("RAAGSPLIT_MAX_VERTICES");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxVertices;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw InvalidArgument(std::string("RAAGSPLIT_MAX_VERTICES must be a positive integer, got '") +
                          raw + "'");
  }
  return static_cast<std::size_t>(value);
}

GraphFormat pick_format(const Options& opt) {
  if (opt.format.empty()) return format_from_path(opt.file);
  auto f = format_from_string(opt.format);
  if (!f) throw InvalidArgument("unknown format '" + opt.format + "'");
  return *f;
}

struct Loaded {
  std::string bytes;
  Graph graph;
};

Loaded load_graph(const Options& opt) {
  Loaded out;
  out.bytes = read_input(opt.file);
  out.graph = parse_graph(out.bytes, pick_format(opt));
  const std::size_t cap = max_vertices();
  if (out.graph.vertex_count() > cap) {
    throw InvalidArgument("graph has " + std::to_string(out.graph.vertex_count()) +
                          " vertices, limit is " + std::to_string(cap) +
                          " (RAAGSPLIT_MAX_VERTICES)");
  }
  return out;
}

Json envelope(const std::string& command, Json arguments, std::string_view bytes, Json result) {
  Json out;
  out["tool"] = std::string(kToolName);
  out["version"] = std::string(kToolVersion);
  out["command"] = command;
  out["arguments"] = std::move(arguments);
  out["input_digest"] = input_digest(bytes);
  out["result"] = std::move(result);
  return out;
}

void emit(std::ostream& out, const Options& opt, const std::string& summary, const Json& report) {
  if (!opt.json_only) out << summary << "\n";
  out << report.dump(2) << "\n";
}

Json graph_arguments(const Options& opt, GraphFormat format) {
  Json args;
  args["file"] = opt.file;
  args["format"] = std::string(to_string(format));
  return args;
}

std::string spectrum_text(const std::vector<int>& spectrum) {
  std::string out = "[";
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(spectrum[i]);
  }
  return out + "]";
}

int cmd_decide(const std::string& name, const Options& opt, std::ostream& out, bool with_amalgam) {
  const Loaded in = load_graph(opt);
  const Graph& g = in.graph;
  const auto witness = splits_over_rank(g, opt.rank);
  Json args = graph_arguments(opt, pick_format(opt));
  args["rank"] = opt.rank;

  Json result;
  result["rank"] = opt.rank;
  result["splits"] = witness.has_value();
  result["answer"] = witness ? "yes" : "no";
  result["witness"] = witness ? witness_json(g, *witness) : Json(nullptr);
  if (with_amalgam) {
    Json amalgam = nullptr;
    if (witness && witness->kind == WitnessKind::direct_amalgam) {
      amalgam = amalgam_json(direct_amalgam(g, witness->clique));
    } else if (witness && witness->kind == WitnessKind::star_split) {
      amalgam = amalgam_json(star_split(g, *witness->star_vertex));
    }
    result["amalgam"] = std::move(amalgam);
  }
  std::string summary = witness ? "yes" : "no";
  if (witness) summary += " (" + std::string(to_string(witness->kind)) + ")";
  emit(out, opt, summary, envelope(name, std::move(args), in.bytes, std::move(result)));
  return witness ? kExitYes : kExitNo;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const Loaded in = load_graph(opt);
  const bool splits = brute_force_splits(in.graph, opt.rank);
  Json args = graph_arguments(opt, pick_format(opt));
  args["rank"] = opt.rank;
  Json result;
  result["rank"] = opt.rank;
  result["splits"] = splits;
  result["answer"] = splits ? "yes" : "no";
  emit(out, opt, splits ? "yes" : "no", envelope("oracle", std::move(args), in.bytes, std::move(result)));
  return splits ? kExitYes : kExitNo;
}

int cmd_spectrum(const Options& opt, std::ostream& out) {
  const Loaded in = load_graph(opt);
  const auto spectrum = splitting_spectrum(in.graph);
  Json result;
  result["spectrum"] = spectrum;
  emit(out, opt, spectrum_text(spectrum),
       envelope("spectrum", graph_arguments(opt, pick_format(opt)), in.bytes, std::move(result)));
  return kExitYes;
}

int cmd_ccd(const Options& opt, std::ostream& out) {
  const Loaded in = load_graph(opt);
  const Graph& g = in.graph;
  const CcdTree tree = complete_cut_decomposition(g);
  const CcdReport report = validate_ccd(g, tree);
  if (!opt.dot_out.empty()) {
    std::ofstream dot(opt.dot_out, std::ios::binary);
    if (!dot) throw InvalidArgument("cannot write '" + opt.dot_out + "'");
    dot << ccd_to_dot(g, tree);
  }
  Json args = graph_arguments(opt, pick_format(opt));
  if (!opt.dot_out.empty()) args["dot"] = opt.dot_out;
  Json result;
  result["tree"] = ccd_json(g, tree);
  result["validation"] = ccd_report_json(report);
  result["graph_of_groups"] =
      report.passed() ? graph_of_groups_json(graph_of_groups(g, tree)) : Json(nullptr);
  std::string summary = std::to_string(tree.pieces.size()) + " piece(s):";
  for (const auto& p : tree.pieces) summary += " " + g.describe(p);
  emit(out, opt, summary, envelope("ccd", std::move(args), in.bytes, std::move(result)));
  return kExitYes;
}

int cmd_present(const Options& opt, std::ostream& out) {
  const Loaded in = load_graph(opt);
  const Presentation p = raag_presentation(in.graph);
  Json result;
  result["presentation"] = presentation_json(p);
  emit(out, opt, p.to_text(),
       envelope("present", graph_arguments(opt, pick_format(opt)), in.bytes, std::move(result)));
  return kExitYes;
}

int cmd_star_split(const Options& opt, std::ostream& out) {
  const Loaded in = load_graph(opt);
  const Graph& g = in.graph;
  auto u = g.find(opt.vertex);
  if (!u) throw InvalidVertex("unknown vertex '" + opt.vertex + "'");
  const Amalgam a = star_split(g, *u);
  const bool verified = verify_star_split(g, a);
  Json args = graph_arguments(opt, pick_format(opt));
  args["vertex"] = opt.vertex;
  Json result;
  result["vertex"] = opt.vertex;
  result["amalgam"] = amalgam_json(a);
  result["verified"] = verified;
  emit(out, opt, verified ? "verified" : "not verified",
       envelope("star-split", std::move(args), in.bytes, std::move(result)));
  return verified ? kExitYes : kExitNo;
}

int cmd_lattice(const Options& opt, std::ostream& out) {
  const std::string bytes = read_input(opt.file);
  const LatticeScenario sc = parse_scenario(bytes);
  const SeparationReport report = deep_components(sc);
  const Verdict verdict =
      report.deep_components >= 2 ? Verdict::separates : Verdict::does_not_separate;
  Json args;
  args["file"] = opt.file;
  Json result;
  result["scenario"] = scenario_json(sc);
  result["report"] = separation_report_json(report);
  result["verdict"] = std::string(to_string(verdict));
  result["note"] = "finite-box proxy: deep means l1-distance >= depth inside the box";
  emit(out, opt, std::string(to_string(verdict)),
       envelope("lattice", std::move(args), bytes, std::move(result)));
  return kExitYes;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  std::mt19937_64 rng(opt.seed);
  const Graph g = random_connected_graph(opt.vertices, opt.density, rng);
  const auto format = opt.format.empty() ? GraphFormat::json : pick_format(opt);
  out << serialize_graph(g, format);
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Splittings of right-angled Artin groups over free abelian subgroups"};
  app.name("raagsplit");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Input format: json, edge-list or dot")
      ->check(CLI::IsMember({"json", "edge-list", "dot"}));
  app.add_flag("--json", opt.json_only, "Print only the JSON report");

  auto graph_file = [&](CLI::App* sub) {
    sub->add_option("FILE", opt.file, "Graph file, or - for stdin")->required();
  };
  auto rank_option = [&](CLI::App* sub) {
    sub->add_option("-n,--rank", opt.rank, "Rank of the free abelian edge group")->required();
  };

  auto* decide = app.add_subcommand("decide", "Does A(G) split over Z^n? Exit 0 yes, 1 no");
  rank_option(decide);
  graph_file(decide);
  auto* spectrum = app.add_subcommand("spectrum", "All n such that A(G) splits over Z^n");
  graph_file(spectrum);
  auto* ccd = app.add_subcommand("ccd", "Complete-cut-decomposition and graph of groups");
  graph_file(ccd);
  ccd->add_option("--dot", opt.dot_out, "Also write the tree as DOT to this file");
  auto* witness = app.add_subcommand("witness", "Splitting witness with its amalgam");
  rank_option(witness);
  graph_file(witness);
  auto* present = app.add_subcommand("present", "Canonical presentation of A(G)");
  graph_file(present);
  auto* star_cmd = app.add_subcommand("star-split", "Split over the star of a vertex and verify");
  star_cmd->add_option("-u,--vertex", opt.vertex, "Vertex label")->required();
  graph_file(star_cmd);
  auto* lattice = app.add_subcommand("lattice", "Coarse separation experiment on a box in Z^n");
  lattice->add_option("SCENARIO", opt.file, "Scenario JSON file")->required();
  auto* oracle = app.add_subcommand("oracle", "Brute-force decision, for cross-checking decide");
  rank_option(oracle);
  graph_file(oracle);
  auto* generate = app.add_subcommand("generate", "Write a random connected graph (fixtures)");
  generate->add_option("--vertices", opt.vertices, "Number of vertices")->check(CLI::Range(1, 64));
  generate->add_option("--density", opt.density, "Probability of each extra edge")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", opt.seed, "Random seed");

  std::vector<const char*> argv{"raagsplit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*decide) return cmd_decide("decide", opt, out, false);
    if (*witness) return cmd_decide("witness", opt, out, true);
    if (*oracle) return cmd_oracle(opt, out);
    if (*spectrum) return cmd_spectrum(opt, out);
    if (*ccd) return cmd_ccd(opt, out);
    if (*present) return cmd_present(opt, out);
    if (*star_cmd) return cmd_star_split(opt, out);
    if (*lattice) return cmd_lattice(opt, out);
    if (*generate) return cmd_generate(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace raagsplit
