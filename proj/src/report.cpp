#include "raagsplit/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "raagsplit/error.hpp"

namespace raagsplit {

Json labels_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

Json word_json(const Presentation& p, const Word& w) {
  Json out = Json::array();
  for (const Letter& l : w) out.push_back(Json::array({p.generators.at(l.generator), l.exponent}));
  return out;
}

Json presentation_json(const Presentation& p) {
  Json out;
  out["generators"] = p.generators;
  out["relators"] = Json::array();
  for (const Word& r : p.relators) out["relators"].push_back(word_json(p, r));
  out["text"] = p.to_text();
  return out;
}

Json amalgam_json(const Amalgam& a) {
  Json out;
  out["factor1"] = presentation_json(a.factor1);
  out["factor2"] = presentation_json(a.factor2);
  out["edge_generators"] = a.edge_generators;
  Json embed1 = Json::array();
  Json embed2 = Json::array();
  for (std::size_t i = 0; i < a.edge_generators.size(); ++i) {
    embed1.push_back({{"generator", a.edge_generators[i]}, {"image", word_json(a.factor1, a.embed1[i])}});
    embed2.push_back({{"generator", a.edge_generators[i]}, {"image", word_json(a.factor2, a.embed2[i])}});
  }
  out["embed1"] = std::move(embed1);
  out["embed2"] = std::move(embed2);
  return out;
}

Json witness_json(const Graph& g, const SplittingWitness& w) {
  Json out;
  out["kind"] = std::string(to_string(w.kind));
  out["case"] = std::string(to_string(w.origin));
  out["rank"] = w.rank;
  out["clique"] = labels_json(g, w.clique);
  out["separator"] = w.separator ? labels_json(g, *w.separator) : Json(nullptr);
  out["star_vertex"] = w.star_vertex ? Json(g.label(*w.star_vertex)) : Json(nullptr);
  if (w.sides) {
    out["sides"] = Json::array({labels_json(g, w.sides->first), labels_json(g, w.sides->second)});
  } else {
    out["sides"] = nullptr;
  }
  return out;
}

Json ccd_json(const Graph& g, const CcdTree& t) {
  Json out;
  out["pieces"] = Json::array();
  for (const auto& p : t.pieces) out["pieces"].push_back(labels_json(g, p));
  out["edges"] = Json::array();
  for (auto [r, s] : t.edges) out["edges"].push_back(Json::array({r, s}));
  out["cuts"] = Json::array();
  for (const auto& c : t.cuts) out["cuts"].push_back(labels_json(g, c));
  return out;
}

Json ccd_report_json(const CcdReport& r) {
  Json out;
  out["passed"] = r.passed();
  out["well_formed"] = r.well_formed;
  out["covers_edges"] = r.covers_edges;
  out["pieces_cut_free"] = r.pieces_cut_free;
  out["cuts_valid"] = r.cuts_valid;
  out["problems"] = r.problems;
  return out;
}

Json graph_of_groups_json(const GraphOfGroups& gog) {
  Json out;
  out["vertex_groups"] = Json::array();
  for (const auto& p : gog.vertex_groups) out["vertex_groups"].push_back(presentation_json(p));
  out["edges"] = Json::array();
  for (const auto& e : gog.edges) {
    Json edge;
    edge["source"] = e.source;
    edge["target"] = e.target;
    edge["group"] = presentation_json(e.group);
    Json into_source = Json::array();
    Json into_target = Json::array();
    for (std::size_t i = 0; i < e.group.generators.size(); ++i) {
      into_source.push_back(Json::array(
          {e.group.generators[i], gog.vertex_groups.at(e.source).generators.at(e.into_source[i])}));
      into_target.push_back(Json::array(
          {e.group.generators[i], gog.vertex_groups.at(e.target).generators.at(e.into_target[i])}));
    }
    edge["into_source"] = std::move(into_source);
    edge["into_target"] = std::move(into_target);
    out["edges"].push_back(std::move(edge));
  }
  return out;
}

Json scenario_json(const LatticeScenario& sc) {
  Json out;
  out["ambient_rank"] = sc.ambient_rank;
  if (const auto* sub = std::get_if<Subgroup>(&sc.subset)) {
    out["generators"] = Json::array();
    for (const auto& v : sub->generators) out["generators"].push_back(v);
  } else {
    out["subset"] = std::string(to_string(std::get<SubsetShape>(sc.subset)));
  }
  out["box_radius"] = sc.box_radius;
  out["thickening"] = sc.thickening;
  out["depth"] = sc.depth;
  return out;
}

Json separation_report_json(const SeparationReport& r) {
  Json out;
  out["total_components"] = r.total_components;
  out["deep_components"] = r.deep_components;
  out["deep_witnesses"] = Json::array();
  for (const auto& w : r.deep_witnesses) {
    out["deep_witnesses"].push_back(
        {{"point", w.point}, {"distance", w.distance}, {"component_size", w.component_size}});
  }
  return out;
}

std::string input_digest(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw InternalInvariant("SHA-256 digest failed");
  }
  std::string out = "sha256:";
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

}  // namespace raagsplit
