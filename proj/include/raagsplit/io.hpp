#ifndef RAAGSPLIT_IO_HPP_
#define RAAGSPLIT_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "raagsplit/ccd.hpp"
#include "raagsplit/graph.hpp"
#include "raagsplit/lattice.hpp"

namespace raagsplit {

// json:      {"vertices": ["a", ...], "edges": [["a", "b"], ...]}
// edge-list: one "a b" pair per line; a single label declares a vertex;
//            '#' starts a comment; vertices in order of first appearance
// dot:       graph [name] { a -- b; c; ... } with bare or quoted IDs only
enum class GraphFormat { json, edge_list, dot };

std::string_view to_string(GraphFormat f);
std::optional<GraphFormat> format_from_string(std::string_view name);
// .json -> json, .dot/.gv -> dot, anything else -> edge-list
GraphFormat format_from_path(std::string_view path);

// Throws ParseError (with line and column) for syntax errors, InvalidArgument
// for duplicate vertices, self-loops and repeated edges, InvalidVertex for
// edges naming undeclared vertices.
Graph parse_graph(std::string_view input, GraphFormat format);

// Throws InvalidArgument if a label cannot be written in the format (only
// the edge-list format restricts labels: no whitespace, no '#').
std::string serialize_graph(const Graph& g, GraphFormat format);

// {"ambient_rank": n, "generators": [[...], ...] | "subset": "half-line",
//  "box_radius": R, "thickening": L, "depth": D}
LatticeScenario parse_scenario(std::string_view input);

// Tree rendering with pieces as node labels and cuts as edge labels.
std::string ccd_to_dot(const Graph& g, const CcdTree& t);

}  // namespace raagsplit

#endif  // RAAGSPLIT_IO_HPP_
