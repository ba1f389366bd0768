#include "raagsplit/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "raagsplit/error.hpp"

namespace raagsplit {

using nlohmann::json;

std::string_view to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::json:
      return "json";
    case GraphFormat::edge_list:
      return "edge-list";
    case GraphFormat::dot:
      return "dot";
  }
  return "unknown";
}

std::optional<GraphFormat> format_from_string(std::string_view name) {
  for (auto f : {GraphFormat::json, GraphFormat::edge_list, GraphFormat::dot}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view ext) {
    return path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext;
  };
  if (ends_with(".json")) return GraphFormat::json;
  if (ends_with(".dot") || ends_with(".gv")) return GraphFormat::dot;
  return GraphFormat::edge_list;
}

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Collects vertices in first-appearance order and edges with their source
// position so that semantic errors can point at the offending line.
class GraphBuilder {
 public:
  void vertex(const std::string& label) {
    if (index_.emplace(label, labels_.size()).second) labels_.push_back(label);
  }

  void declare(const std::string& label, Position at) {
    if (!index_.emplace(label, labels_.size()).second) {
      throw InvalidArgument("duplicate vertex '" + label + "' at line " +
                            std::to_string(at.line));
    }
    labels_.push_back(label);
  }

  void edge(const std::string& a, const std::string& b, Position at, bool declare_ends) {
    const std::string where = " at line " + std::to_string(at.line) + ", column " +
                              std::to_string(at.column);
    if (a == b) throw InvalidArgument("self-loop at '" + a + "'" + where);
    if (declare_ends) {
      vertex(a);
      vertex(b);
    }
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end()) throw InvalidVertex("unknown vertex '" + a + "'" + where);
    if (ib == index_.end()) throw InvalidVertex("unknown vertex '" + b + "'" + where);
    Edge e{std::min(ia->second, ib->second), std::max(ia->second, ib->second)};
    if (!seen_.insert(e).second) {
      throw InvalidArgument("duplicate edge '" + a + "' -- '" + b + "'" + where);
    }
    edges_.push_back(e);
  }

  Graph build() { return Graph(std::move(labels_), edges_); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::set<Edge> seen_;
};

Graph parse_json_graph(std::string_view input) {
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& e) {
    const Position p = position_of(input, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", p.line, p.column);
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("expected an object with a \"vertices\" array", 1, 1);
  }
  GraphBuilder builder;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings", 1, 1);
    builder.declare(v.get<std::string>(), {});
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array", 1, 1);
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ParseError("each edge must be a pair of labels", 1, 1);
      }
      builder.edge(e[0].get<std::string>(), e[1].get<std::string>(), {}, false);
    }
  }
  return builder.build();
}

Graph parse_edge_list(std::string_view input) {
  GraphBuilder builder;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= input.size()) {
    std::size_t stop = input.find('\n', start);
    if (stop == std::string_view::npos) stop = input.size();
    std::string_view line = input.substr(start, stop - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.emplace_back(std::string(line.substr(i, j - i)), i + 1);
      i = j;
    }
    if (tokens.size() == 1) {
      builder.vertex(tokens[0].first);
    } else if (tokens.size() == 2) {
      builder.edge(tokens[0].first, tokens[1].first, {line_no, tokens[0].second}, true);
    } else if (tokens.size() > 2) {
      throw ParseError("expected at most two labels per line", line_no, tokens[2].second);
    }
    start = stop + 1;
  }
  return builder.build();
}

// Tokenizer for the undirected, attribute-free DOT subset.
class DotLexer {
 public:
  enum class Kind { id, lbrace, rbrace, semicolon, edge_op, end };
  struct Token {
    Kind kind;
    std::string text;
    Position at;
  };

  explicit DotLexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blank();
    const Position at = pos_;
    if (i_ >= src_.size()) return {Kind::end, "", at};
    const char c = src_[i_];
    if (c == '{') return single(Kind::lbrace, at);
    if (c == '}') return single(Kind::rbrace, at);
    if (c == ';' || c == ',') return single(Kind::semicolon, at);
    if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '-') {
      advance(2);
      return {Kind::edge_op, "--", at};
    }
    if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
      throw ParseError("directed edges are not supported", at.line, at.column);
    }
    if (c == '[' || c == '=') {
      throw ParseError("attributes are not supported", at.line, at.column);
    }
    if (c == '"') return quoted(at);
    if (is_id_char(c)) {
      std::size_t j = i_;
      while (j < src_.size() && is_id_char(src_[j])) ++j;
      std::string text(src_.substr(i_, j - i_));
      advance(j - i_);
      return {Kind::id, std::move(text), at};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at.line, at.column);
  }

 private:
  static bool is_id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  void advance(std::size_t k) {
    for (; k > 0 && i_ < src_.size(); --k, ++i_) {
      if (src_[i_] == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else {
        ++pos_.column;
      }
    }
  }

  Token single(Kind kind, Position at) {
    std::string text(1, src_[i_]);
    advance(1);
    return {kind, std::move(text), at};
  }

  Token quoted(Position at) {
    advance(1);
    std::string text;
    while (i_ < src_.size() && src_[i_] != '"') {
      if (src_[i_] == '\\' && i_ + 1 < src_.size() && src_[i_ + 1] == '"') {
        text += '"';
        advance(2);
      } else {
        text += src_[i_];
        advance(1);
      }
    }
    if (i_ >= src_.size()) throw ParseError("unterminated string", at.line, at.column);
    advance(1);
    return {Kind::id, std::move(text), at};
  }

  void skip_blank() {
    while (i_ < src_.size()) {
      const char c = src_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (src_.substr(i_, 2) == "//" || (c == '#' && pos_.column == 1)) {
        while (i_ < src_.size() && src_[i_] != '\n') advance(1);
      } else if (src_.substr(i_, 2) == "/*") {
        const Position at = pos_;
        const std::size_t close = src_.find("*/", i_ + 2);
        if (close == std::string_view::npos) {
          throw ParseError("unterminated comment", at.line, at.column);
        }
        advance(close + 2 - i_);
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Position pos_;
};

bool keyword(const DotLexer::Token& t, std::string_view word) {
  if (t.kind != DotLexer::Kind::id || t.text.size() != word.size()) return false;
  return std::equal(t.text.begin(), t.text.end(), word.begin(), [](char a, char b) {
    return std::tolower(static_cast<unsigned char>(a)) == b;
  });
}

Graph parse_dot(std::string_view input) {
  using Kind = DotLexer::Kind;
  DotLexer lex(input);
  auto fail = [](const DotLexer::Token& t, const std::string& what) {
    throw ParseError(what, t.at.line, t.at.column);
  };

  DotLexer::Token t = lex.next();
  if (keyword(t, "strict")) fail(t, "strict graphs are not supported");
  if (keyword(t, "digraph")) fail(t, "directed graphs are not supported");
  if (!keyword(t, "graph")) fail(t, "expected 'graph'");
  t = lex.next();
  if (t.kind == Kind::id) t = lex.next();
  if (t.kind != Kind::lbrace) fail(t, "expected '{'");

  GraphBuilder builder;
  t = lex.next();
  while (t.kind != Kind::rbrace) {
    if (t.kind == Kind::end) fail(t, "expected '}'");
    if (t.kind == Kind::semicolon) {
      t = lex.next();
      continue;
    }
    if (t.kind != Kind::id) fail(t, "expected a node identifier");
    if (keyword(t, "node") || keyword(t, "edge") || keyword(t, "subgraph") ||
        keyword(t, "graph")) {
      fail(t, "'" + t.text + "' statements are not supported");
    }
    DotLexer::Token prev = t;
    t = lex.next();
    if (t.kind != Kind::edge_op) {
      builder.vertex(prev.text);
      continue;
    }
    while (t.kind == Kind::edge_op) {
      DotLexer::Token target = lex.next();
      if (target.kind != Kind::id) fail(target, "expected a node identifier after '--'");
      builder.edge(prev.text, target.text, prev.at, true);
      prev = target;
      t = lex.next();
    }
  }
  t = lex.next();
  if (t.kind != Kind::end) fail(t, "unexpected content after the graph");
  return builder.build();
}

bool bare_dot_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  }
  for (std::string_view kw : {"graph", "digraph", "node", "edge", "strict", "subgraph"}) {
    std::string lower(s.size(), ' ');
    std::transform(s.begin(), s.end(), lower.begin(),
                   [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); });
    if (lower == kw) return false;
  }
  return true;
}

std::string dot_id(const std::string& s) {
  if (bare_dot_id(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph parse_graph(std::string_view input, GraphFormat format) {
  switch (format) {
    case GraphFormat::json:
      return parse_json_graph(input);
    case GraphFormat::edge_list:
      return parse_edge_list(input);
    case GraphFormat::dot:
      return parse_dot(input);
  }
  throw InvalidArgument("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::json: {
      nlohmann::ordered_json doc;
      doc["vertices"] = g.labels();
      doc["edges"] = nlohmann::ordered_json::array();
      for (auto [u, v] : g.edges()) doc["edges"].push_back(nlohmann::ordered_json::array({g.label(u), g.label(v)}));
      return doc.dump(2) + "\n";
    }
    case GraphFormat::edge_list: {
      std::string out;
      // Declaring every vertex first pins the vertex order.
      for (const auto& label : g.labels()) {
        const bool plain =
            !label.empty() && label.find('#') == std::string::npos &&
            std::none_of(label.begin(), label.end(),
                         [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (!plain) {
          throw InvalidArgument("label '" + label + "' cannot be written as an edge list");
        }
        out += label + "\n";
      }
      for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
      return out;
    }
    case GraphFormat::dot: {
      std::string out = "graph {\n";
      for (const auto& label : g.labels()) out += "  " + dot_id(label) + ";\n";
      for (auto [u, v] : g.edges()) {
        out += "  " + dot_id(g.label(u)) + " -- " + dot_id(g.label(v)) + ";\n";
      }
      return out + "}\n";
    }
  }
  throw InvalidArgument("unknown graph format");
}

LatticeScenario parse_scenario(std::string_view input) {
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& e) {
    const Position p = position_of(input, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", p.line, p.column);
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", 1, 1);
  auto integer = [&](const char* key) -> std::optional<int> {
    if (!doc.contains(key)) return std::nullopt;
    if (!doc[key].is_number_integer()) {
      throw InvalidArgument(std::string("\"") + key + "\" must be an integer");
    }
    return doc[key].get<int>();
  };

  LatticeScenario sc;
  auto rank = integer("ambient_rank");
  if (!rank) throw InvalidArgument("\"ambient_rank\" is required");
  sc.ambient_rank = *rank;
  sc.box_radius = integer("box_radius").value_or(default_box_radius(sc.ambient_rank));
  sc.thickening = integer("thickening").value_or(1);
  sc.depth = integer("depth").value_or(sc.box_radius / 4);

  const bool has_generators = doc.contains("generators");
  const bool has_subset = doc.contains("subset");
  if (has_generators == has_subset) {
    throw InvalidArgument("exactly one of \"generators\" and \"subset\" is required");
  }
  if (has_generators) {
    Subgroup sub;
    if (!doc["generators"].is_array()) throw InvalidArgument("\"generators\" must be an array");
    for (const auto& v : doc["generators"]) {
      if (!v.is_array()) throw InvalidArgument("each generator must be an integer array");
      LatticePoint p;
      for (const auto& x : v) {
        if (!x.is_number_integer()) throw InvalidArgument("generator entries must be integers");
        p.push_back(x.get<std::int64_t>());
      }
      sub.generators.push_back(std::move(p));
    }
    sc.subset = std::move(sub);
  } else {
    if (!doc["subset"].is_string()) throw InvalidArgument("\"subset\" must be a string");
    auto shape = shape_from_string(doc["subset"].get<std::string>());
    if (!shape) {
      throw InvalidArgument("unknown subset '" + doc["subset"].get<std::string>() + "'");
    }
    sc.subset = *shape;
  }
  validate_scenario(sc);
  return sc;
}

std::string ccd_to_dot(const Graph& g, const CcdTree& t) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "graph ccd {\n";
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + quote(g.describe(t.pieces[i])) + "];\n";
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    out += "  n" + std::to_string(t.edges[i].first) + " -- n" +
           std::to_string(t.edges[i].second) + " [label=" + quote(g.describe(t.cuts[i])) +
           "];\n";
  }
  return out + "}\n";
}

}  // namespace raagsplit
