#include "raagsplit/presentation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "raagsplit/error.hpp"

namespace raagsplit {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exponent = -l.exponent;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

Word commutator(const Word& x, const Word& y) {
  return concat(concat(x, y), concat(inverse(x), inverse(y)));
}

Word commutator(std::size_t x, std::size_t y) {
  return {{x, 1}, {y, 1}, {x, -1}, {y, -1}};
}

namespace {

struct Run {
  std::size_t generator;
  int power;
};

std::vector<Run> runs_of(const Word& w) {
  std::vector<Run> out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().power += l.exponent;
    } else {
      out.push_back({l.generator, l.exponent});
    }
  }
  return out;
}

}  // namespace

std::optional<PowerCommutator> as_power_commutator(const Word& w) {
  const Word reduced = free_reduce(w);
  if (reduced.size() != w.size()) return std::nullopt;
  auto runs = runs_of(w);
  if (runs.size() != 4) return std::nullopt;
  const bool shape = runs[0].generator == runs[2].generator &&
                     runs[1].generator == runs[3].generator &&
                     runs[0].generator != runs[1].generator &&
                     runs[0].power == -runs[2].power && runs[1].power == -runs[3].power;
  if (!shape) return std::nullopt;
  return PowerCommutator{runs[0].generator, runs[0].power, runs[1].generator,
                         runs[1].power};
}

Word normalize_relator(Word w) {
  w = free_reduce(std::move(w));
  if (auto c = as_power_commutator(w);
      c && c->x_power == 1 && c->y_power == 1 && c->y < c->x) {
    return commutator(c->y, c->x);
  }
  return w;
}

std::optional<std::size_t> Presentation::find(std::string_view label) const {
  auto it = std::find(generators.begin(), generators.end(), label);
  if (it == generators.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

std::string Presentation::render(const Word& w) const {
  auto power = [&](std::size_t g, int p) {
    std::string s = generators.at(g);
    if (p != 1) s += "^" + std::to_string(p);
    return s;
  };
  if (auto c = as_power_commutator(w)) {
    return "[" + power(c->x, c->x_power) + "," + power(c->y, c->y_power) + "]";
  }
  if (w.empty()) return "1";
  std::string out;
  for (const Run& r : runs_of(w)) {
    if (!out.empty()) out += " ";
    out += power(r.generator, r.power);
  }
  return out;
}

std::string Presentation::to_text() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    out += i ? ", " : " ";
    out += render(relators[i]);
  }
  return out + ">";
}

namespace {

Presentation with_suffix(Presentation p, std::string_view suffix) {
  for (auto& name : p.generators) name += suffix;
  return p;
}

Word single(std::size_t g) { return {{g, 1}}; }

}  // namespace

Presentation raag_presentation(const Graph& g) {
  Presentation p;
  p.generators = g.labels();
  for (auto [u, v] : g.edges()) p.relators.push_back(commutator(u, v));
  return p;
}

VertexSet normalizer_of_special(const Graph& g, const VertexSet& s) {
  return star(g, s);
}

Amalgam direct_amalgam(const Graph& g, const VertexSet& s) {
  if (!is_clique(g, s) || !separates(g, s)) {
    throw InvalidArgument(g.describe(s) + " is not a separating clique");
  }
  auto comps = components_without(g, s);
  VertexSet first = s.united(comps.front());
  VertexSet second = s;
  for (std::size_t i = 1; i < comps.size(); ++i) second = second.united(comps[i]);

  Amalgam a;
  a.factor1 = raag_presentation(induced_subgraph(g, first));
  a.factor2 = raag_presentation(induced_subgraph(g, second));
  for (Vertex v : s) {
    const std::string& name = g.label(v);
    a.edge_generators.push_back(name);
    a.embed1.push_back(single(*a.factor1.find(name)));
    a.embed2.push_back(single(*a.factor2.find(name)));
  }
  return a;
}

Amalgam star_split(const Graph& g, Vertex u) {
  if (u >= g.vertex_count()) {
    throw InvalidVertex("vertex index " + std::to_string(u) + " out of range");
  }
  const VertexSet st = star(g, VertexSet{u});
  if (st == g.all_vertices()) {
    throw StarIsWholeGraph("star(" + g.label(u) + ") is the whole graph");
  }

  Amalgam a;
  a.factor1 = with_suffix(raag_presentation(induced_subgraph(g, st)), kStarCopySuffix);
  a.factor2 = with_suffix(raag_presentation(g), kGraphCopySuffix);
  for (std::size_t i = 0; i < st.size(); ++i) {
    const Vertex v = st[i];
    a.edge_generators.push_back(g.label(v));
    // factor1 generators follow st's order, factor2 generators follow g's.
    a.embed1.push_back(v == u ? Word{{i, 1}, {i, 1}} : single(i));
    a.embed2.push_back(single(v));
  }
  return a;
}

namespace {

void check_word(const Word& w, std::size_t generators, const char* where) {
  for (const Letter& l : w) {
    if (l.generator >= generators || (l.exponent != 1 && l.exponent != -1)) {
      throw InvalidArgument(std::string("malformed amalgam: bad letter in ") + where);
    }
  }
}

void check_amalgam(const Amalgam& a) {
  const std::size_t edges = a.edge_generators.size();
  if (a.embed1.size() != edges || a.embed2.size() != edges) {
    throw InvalidArgument("malformed amalgam: embeddings do not cover the edge group");
  }
  for (const auto& r : a.factor1.relators) check_word(r, a.factor1.generators.size(), "factor1");
  for (const auto& r : a.factor2.relators) check_word(r, a.factor2.generators.size(), "factor2");
  for (const auto& w : a.embed1) check_word(w, a.factor1.generators.size(), "embed1");
  for (const auto& w : a.embed2) check_word(w, a.factor2.generators.size(), "embed2");
  std::set<std::string> names;
  for (const auto* p : {&a.factor1, &a.factor2}) {
    for (const auto& name : p->generators) {
      if (!names.insert(name).second) {
        throw InvalidArgument("malformed amalgam: generator '" + name + "' repeated");
      }
    }
  }
}

std::optional<std::string> strip_suffix(const std::string& name, std::string_view suffix) {
  if (name.size() < suffix.size() ||
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) {
    return std::nullopt;
  }
  return name.substr(0, name.size() - suffix.size());
}

Word substitute(const Word& w, std::size_t target, const Word& replacement) {
  Word out;
  for (const Letter& l : w) {
    if (l.generator != target) {
      out.push_back(l);
    } else {
      const Word piece = l.exponent > 0 ? replacement : inverse(replacement);
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  return free_reduce(std::move(out));
}

}  // namespace

bool verify_star_split(const Graph& g, const Amalgam& a) {
  check_amalgam(a);
  const std::size_t offset = a.factor1.generators.size();
  const std::size_t total = offset + a.factor2.generators.size();

  // The star vertex is the unique edge generator sent to a square; the rest
  // must go to single generators on both sides.
  std::optional<std::size_t> square_root;
  std::vector<std::size_t> copy_in_graph;
  for (std::size_t i = 0; i < a.edge_generators.size(); ++i) {
    const Word& w1 = a.embed1[i];
    const Word& w2 = a.embed2[i];
    if (w2.size() != 1 || w2[0].exponent != 1) return false;
    copy_in_graph.push_back(w2[0].generator + offset);
    if (w1.size() == 2 && w1[0] == w1[1] && w1[0].exponent == 1) {
      if (square_root) return false;
      square_root = w1[0].generator;
    } else if (w1.size() != 1 || w1[0].exponent != 1) {
      return false;
    }
  }
  if (!square_root) return false;

  // Non-triviality: u_1 is outside the image of the first embedding and the
  // second embedding misses some generator of the graph factor.
  for (const Word& w1 : a.embed1) {
    if (w1.size() == 1 && w1[0].generator == *square_root) return false;
  }
  {
    std::set<std::size_t> hit(copy_in_graph.begin(), copy_in_graph.end());
    if (hit.size() != copy_in_graph.size()) return false;
    if (hit.size() >= a.factor2.generators.size()) return false;
  }

  // Full presentation of the amalgam on the disjoint union of generators.
  std::vector<Word> relators = a.factor1.relators;
  for (Word r : a.factor2.relators) {
    for (Letter& l : r) l.generator += offset;
    relators.push_back(std::move(r));
  }

  std::vector<Word> identifications;
  for (std::size_t i = 0; i < a.edge_generators.size(); ++i) {
    identifications.push_back(concat(a.embed1[i], inverse(single(copy_in_graph[i]))));
  }

  // Tietze eliminations v_2 = v_1 (v in link(u)) and u_2 = u_1^2: each
  // identification W x^-1, with x absent from W, removes x by x := W.
  std::vector<char> alive(total, 1);
  for (std::size_t i = 0; i < identifications.size(); ++i) {
    const Word& rel = identifications[i];
    const std::size_t eliminated = copy_in_graph[i];
    const Word definition(rel.begin(), rel.end() - 1);
    const bool usable =
        rel.back() == Letter{eliminated, -1} &&
        std::none_of(definition.begin(), definition.end(),
                     [&](const Letter& l) { return l.generator == eliminated; });
    if (!usable) return false;
    for (Word& r : relators) r = substitute(r, eliminated, definition);
    for (std::size_t j = i + 1; j < identifications.size(); ++j) {
      identifications[j] = substitute(identifications[j], eliminated, definition);
    }
    alive[eliminated] = 0;
  }

  // Drop [x^p, y^q] when [x, y] is itself a relator; drop trivial words.
  std::set<Word> plain;
  for (Word& r : relators) {
    r = normalize_relator(std::move(r));
    if (auto c = as_power_commutator(r); c && c->x_power == 1 && c->y_power == 1) {
      plain.insert(r);
    }
  }
  std::set<Word> kept;
  for (const Word& r : relators) {
    if (r.empty()) continue;
    if (auto c = as_power_commutator(r); c && !(c->x_power == 1 && c->y_power == 1)) {
      const Word base = normalize_relator(commutator(c->x, c->y));
      if (plain.count(base)) continue;
    }
    kept.insert(r);
  }

  // Relabel the surviving generators by their vertex.
  std::vector<std::optional<Vertex>> vertex_of(total);
  std::set<Vertex> covered;
  for (std::size_t gen = 0; gen < total; ++gen) {
    if (!alive[gen]) continue;
    const bool first = gen < offset;
    const std::string& name =
        first ? a.factor1.generators[gen] : a.factor2.generators[gen - offset];
    auto base = strip_suffix(name, first ? kStarCopySuffix : kGraphCopySuffix);
    if (!base) return false;
    auto v = g.find(*base);
    if (!v || !covered.insert(*v).second) return false;
    vertex_of[gen] = *v;
  }
  if (covered.size() != g.vertex_count()) return false;

  std::set<Word> rewritten;
  for (const Word& r : kept) {
    Word w;
    for (const Letter& l : r) {
      if (!vertex_of[l.generator]) return false;
      w.push_back({*vertex_of[l.generator], l.exponent});
    }
    rewritten.insert(normalize_relator(std::move(w)));
  }

  const Presentation canonical = raag_presentation(g);
  const std::set<Word> expected(canonical.relators.begin(), canonical.relators.end());
  return rewritten == expected;
}

}  // namespace raagsplit
