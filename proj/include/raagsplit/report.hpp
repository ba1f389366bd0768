#ifndef RAAGSPLIT_REPORT_HPP_
#define RAAGSPLIT_REPORT_HPP_

#include <string_view>

#include "json.hpp"
#include "raagsplit/ccd.hpp"
#include "raagsplit/graph.hpp"
#include "raagsplit/lattice.hpp"
#include "raagsplit/presentation.hpp"
#include "raagsplit/splitting.hpp"

namespace raagsplit {

// Insertion-ordered so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "raagsplit";
inline constexpr std::string_view kToolVersion = "0.1.0";

Json labels_json(const Graph& g, const VertexSet& s);
Json word_json(const Presentation& p, const Word& w);
Json presentation_json(const Presentation& p);
Json amalgam_json(const Amalgam& a);
Json witness_json(const Graph& g, const SplittingWitness& w);
Json ccd_json(const Graph& g, const CcdTree& t);
Json ccd_report_json(const CcdReport& r);
Json graph_of_groups_json(const GraphOfGroups& gog);
Json scenario_json(const LatticeScenario& sc);
Json separation_report_json(const SeparationReport& r);

// Hex SHA-256 of the raw input bytes, prefixed "sha256:".
std::string input_digest(std::string_view bytes);

}  // namespace raagsplit

#endif  // RAAGSPLIT_REPORT_HPP_
