#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordsym/factor_index.hpp"
#include "wordsym/group.hpp"
#include "wordsym/stabilize.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

struct Orbit {
  std::vector<Word> members;  // sorted; front() is the canonical representative
  const Word& representative() const { return members.front(); }
};

struct SymEdge {
  Orbit words;        // the edge orbit
  Word from;          // representatives of the endpoint vertex orbits,
  Word to;            // ordered from <= to
  bool loop = false;  // endpoint orbits coincide
  std::size_t occurrences = 0;  // scan gaps that produced this orbit
};

// Graph of symmetries of order n: vertices are G-orbits of special factors
// of length n, edges are G-orbits of words connecting consecutive special
// occurrences with no special factor strictly inside.
struct SymGraph {
  std::size_t order = 0;
  std::vector<Orbit> vertices;  // sorted by representative
  std::vector<SymEdge> edges;   // sorted by edge representative

  const SymEdge* find_edge(WordView rep) const {
    for (const SymEdge& e : edges) {
      if (WordView(e.words.representative()) == rep) return &e;
    }
    return nullptr;
  }
};

struct ClosureReport {
  bool closed = true;
  Word witness_factor;
  std::string witness_element;
};

// Every factor w with |w| <= n_max must have eta(w) in the language for all
// eta in G, as witnessed by the indexed prefix.
inline ClosureReport closure_check(const FactorIndex& index, const SymmetryGroup& g,
                                   std::size_t n_max) {
  if (n_max > index.n_max()) throw contract_error("closure_check: n_max beyond index");
  ClosureReport rep;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t i = 0; i < index.entry_count(n); ++i) {
      WordView w = index.factor_view(n, i);
      for (const GroupElement& e : g.elements()) {
        if (e.is_identity()) continue;
        if (!index.contains(e.apply(w))) {
          rep.closed = false;
          rep.witness_factor = Word(w);
          rep.witness_element = element_label(e);
          return rep;
        }
      }
    }
  }
  return rep;
}

struct GraphBuildOptions {
  bool index_stabilized = true;
  bool allow_unstabilized = false;
  bool check_closure = true;  // verify closure at lengths n and n+1
};

inline SymGraph build_symmetry_graph(const FactorIndex& index, const SymmetryGroup& g,
                                     std::size_t n, GraphBuildOptions opts = {}) {
  if (n == 0 || n > index.n_max()) throw contract_error("build_symmetry_graph: order out of range");
  if (g.alphabet_size() != index.alphabet_size()) {
    throw contract_error("build_symmetry_graph: group and index alphabets differ");
  }
  if (!opts.index_stabilized && !opts.allow_unstabilized) {
    throw contract_error("build_symmetry_graph: index not stabilized (override required)");
  }
  if (opts.check_closure) {
    for (std::size_t m : {n, std::min(n + 1, index.n_max())}) {
      for (std::size_t i = 0; i < index.entry_count(m); ++i) {
        WordView w = index.factor_view(m, i);
        for (const GroupElement& e : g.elements()) {
          if (!index.contains(e.apply(w))) {
            throw spec_error("build_symmetry_graph: language not closed under group at length " +
                             std::to_string(m));
          }
        }
      }
    }
  }

  SymGraph graph;
  graph.order = n;

  std::map<Word, Orbit> vertex_by_rep;
  for (std::size_t i = 0; i < index.entry_count(n); ++i) {
    if (!index.is_special(n, i, FactorIndex::Side::either)) continue;
    WordView w = index.factor_view(n, i);
    std::vector<Word> members = orbit(w, g);
    Word rep = members.front();
    vertex_by_rep.emplace(std::move(rep), Orbit{std::move(members)});
  }

  struct PendingEdge {
    Orbit words;
    Word from, to;
    bool loop;
    std::size_t occurrences;
  };
  std::map<Word, PendingEdge> edge_by_rep;

  const Word& prefix = index.prefix();
  std::vector<std::size_t> positions = index.special_positions(n);
  for (std::size_t k = 0; k + 1 < positions.size(); ++k) {
    const std::size_t a = positions[k];
    const std::size_t b = positions[k + 1];
    WordView word = WordView(prefix).substr(a, b + n - a);
    Word rep = orbit_representative(word, g);
    auto it = edge_by_rep.find(rep);
    if (it != edge_by_rep.end()) {
      it->second.occurrences += 1;
      continue;
    }
    Word from = orbit_representative(WordView(prefix).substr(a, n), g);
    Word to = orbit_representative(WordView(prefix).substr(b, n), g);
    if (to < from) std::swap(from, to);
    PendingEdge pe{Orbit{orbit(word, g)}, std::move(from), std::move(to), false, 1};
    pe.loop = pe.from == pe.to;
    edge_by_rep.emplace(std::move(rep), std::move(pe));
  }

  for (auto& [rep, o] : vertex_by_rep) graph.vertices.push_back(std::move(o));
  for (auto& [rep, pe] : edge_by_rep) {
    graph.edges.push_back(SymEdge{std::move(pe.words), std::move(pe.from), std::move(pe.to),
                                  pe.loop, pe.occurrences});
  }
  return graph;
}

struct TlsReport {
  std::size_t order = 0;
  bool is_tree_after_loop_removal = false;
  bool loops_all_palindromic = false;
  bool vacuous = false;  // graph has no vertices at all
  std::vector<std::string> witnesses;

  bool pass() const { return is_tree_after_loop_removal && loops_all_palindromic; }
};

// Tree test: connected with exactly |V|-1 non-loop edges (parallel orbits
// count separately, so a multi-edge fails). Loop test: some orbit member is
// a Theta-palindrome for some involutive antimorphism of G.
inline TlsReport check_tls(const SymGraph& graph, const SymmetryGroup& g) {
  TlsReport rep;
  rep.order = graph.order;
  if (graph.vertices.empty()) {
    rep.vacuous = true;
    rep.is_tree_after_loop_removal = true;
    rep.loops_all_palindromic = true;
    return rep;
  }

  std::map<WordView, std::size_t> vertex_id;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    vertex_id.emplace(WordView(graph.vertices[i].representative()), i);
  }
  std::vector<std::size_t> parent(graph.vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::size_t non_loop_edges = 0;
  std::size_t merges = 0;
  for (const SymEdge& e : graph.edges) {
    if (e.loop) continue;
    ++non_loop_edges;
    auto it_from = vertex_id.find(WordView(e.from));
    auto it_to = vertex_id.find(WordView(e.to));
    if (it_from == vertex_id.end() || it_to == vertex_id.end()) {
      rep.witnesses.push_back("edge [" + format_word(e.words.representative()) +
                              "] touches an unknown vertex");
      continue;
    }
    std::size_t a = find(it_from->second), b = find(it_to->second);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  const bool connected = merges + 1 == graph.vertices.size();
  rep.is_tree_after_loop_removal = connected && non_loop_edges == graph.vertices.size() - 1;
  if (!rep.is_tree_after_loop_removal) {
    rep.witnesses.push_back("non-loop edges: " + std::to_string(non_loop_edges) + ", vertices: " +
                            std::to_string(graph.vertices.size()) +
                            (connected ? "" : ", disconnected"));
  }

  rep.loops_all_palindromic = true;
  const std::vector<GroupElement> thetas = g.involutive_antimorphisms();
  for (const SymEdge& e : graph.edges) {
    if (!e.loop) continue;
    bool ok = false;
    for (const Word& member : e.words.members) {
      for (const GroupElement& theta : thetas) {
        if (FactorIndex::is_theta_fixed(member, theta)) {
          ok = true;
          break;
        }
      }
      if (ok) break;
    }
    if (!ok) {
      rep.loops_all_palindromic = false;
      rep.witnesses.push_back("loop [" + format_word(e.words.representative()) +
                              "] is not Theta-palindromic for any involutive antimorphism");
    }
  }
  return rep;
}

struct DistinguishingReport {
  bool found = false;
  std::size_t value = 0;
  std::size_t searched_up_to = 0;
};

// Least N such that every length-N factor separates the antimorphisms of G
// pairwise. Theta1(w)=Theta2(w) iff every letter of w is fixed by
// perm(Theta2)^-1 perm(Theta1), so each pair contributes an "agreement"
// letter set; N is distinguishing iff no length-N factor stays inside any
// agreement set.
inline DistinguishingReport distinguishing_N(const FactorIndex& index, const SymmetryGroup& g,
                                             std::size_t search_limit = 0) {
  DistinguishingReport rep;
  std::vector<GroupElement> antis = g.antimorphisms();
  if (antis.size() <= 1) {
    rep.found = true;
    rep.value = 0;
    return rep;
  }
  std::vector<std::uint8_t> agree_masks;
  for (std::size_t i = 0; i < antis.size(); ++i) {
    for (std::size_t j = i + 1; j < antis.size(); ++j) {
      GroupElement diff = compose(antis[j].inverse(), antis[i]);
      std::uint8_t mask = 0;
      for (int c = 0; c < g.alphabet_size(); ++c) {
        if (diff.permute(static_cast<Letter>(c)) == c) mask |= std::uint8_t(1) << c;
      }
      agree_masks.push_back(mask);
    }
  }
  const std::size_t limit = search_limit == 0 ? index.n_max() : search_limit;
  for (std::size_t n = 1; n <= limit; ++n) {
    rep.searched_up_to = n;
    bool distinguishing = true;
    for (std::size_t i = 0; i < index.entry_count(n) && distinguishing; ++i) {
      WordView w = index.factor_view(n, i);
      std::uint8_t content = 0;
      for (unsigned char c : w) content |= std::uint8_t(1) << c;
      for (std::uint8_t mask : agree_masks) {
        if ((content & ~mask) == 0) {
          distinguishing = false;
          break;
        }
      }
    }
    if (distinguishing) {
      rep.found = true;
      rep.value = n;
      return rep;
    }
  }
  return rep;
}

struct EqualityReport {
  std::size_t n = 0;
  std::size_t lhs = 0;  // C(n+1) - C(n) + #G
  std::size_t rhs = 0;  // sum over G^(2) of P(n) + P(n+1)
  bool equal = false;
  bool inequality_holds = false;  // lhs >= rhs (Theorem-style bound)
};

inline EqualityReport check_equality(const FactorIndex& index, const SymmetryGroup& g,
                                     std::size_t n,
                                     std::optional<std::size_t> known_distinguishing = {}) {
  if (n + 1 > index.n_max()) throw contract_error("check_equality: need factors of length n+1");
  std::size_t dist;
  if (known_distinguishing) {
    dist = *known_distinguishing;
  } else {
    DistinguishingReport d = distinguishing_N(index, g, n + 1);
    if (!d.found) throw contract_error("check_equality: no distinguishing length <= n");
    dist = d.value;
  }
  if (n < dist) {
    throw contract_error("check_equality: n below the distinguishing length");
  }
  EqualityReport rep;
  rep.n = n;
  rep.lhs = index.complexity(n + 1) - index.complexity(n) + g.size();
  rep.rhs = 0;
  for (const GroupElement& theta : g.involutive_antimorphisms()) {
    rep.rhs += index.theta_palindrome_count(n, theta) + index.theta_palindrome_count(n + 1, theta);
  }
  rep.equal = rep.lhs == rep.rhs;
  rep.inequality_holds = rep.lhs >= rep.rhs;
  return rep;
}

struct RichnessEvidence {
  std::size_t n = 0;
  std::string method;  // "graph" or "equality"
  bool pass = false;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  std::string detail;
};

struct RichnessReport {
  bool g_rich = false;  // up to n_max only; the infinite claim is never made
  std::size_t n_max = 0;
  bool closure_ok = false;
  std::string closure_witness;
  bool distinguishing_found = false;
  std::size_t distinguishing = 0;
  bool stabilized = false;
  std::size_t prefix_length = 0;
  std::vector<RichnessEvidence> evidence;
};

// Direct tls checks below the distinguishing length, the Theorem-4 equality
// from there on.
inline RichnessReport g_rich_verdict_on_index(const FactorIndex& index, bool index_stabilized,
                                              const SymmetryGroup& g, std::size_t n_max) {
  if (n_max + 1 > index.n_max()) throw contract_error("g_rich_verdict: index n_max too small");
  RichnessReport rep;
  rep.n_max = n_max;
  rep.stabilized = index_stabilized;
  rep.prefix_length = index.prefix().size();

  ClosureReport closure = closure_check(index, g, n_max + 1);
  rep.closure_ok = closure.closed;
  if (!closure.closed) {
    rep.closure_witness = closure.witness_element + "(" + format_word(closure.witness_factor) +
                          ") is not a factor";
    return rep;
  }

  DistinguishingReport dist = distinguishing_N(index, g, n_max + 1);
  rep.distinguishing_found = dist.found;
  rep.distinguishing = dist.value;
  if (!dist.found) return rep;

  bool all_pass = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    RichnessEvidence ev;
    ev.n = n;
    if (n < dist.value) {
      SymGraph graph = build_symmetry_graph(index, g, n,
                                            GraphBuildOptions{index_stabilized, true, false});
      TlsReport tls = check_tls(graph, g);
      ev.method = "graph";
      ev.pass = tls.pass();
      ev.detail = std::to_string(graph.vertices.size()) + " vertices, " +
                  std::to_string(graph.edges.size()) + " edge orbits";
      if (!ev.pass && !tls.witnesses.empty()) ev.detail += "; " + tls.witnesses.front();
    } else {
      EqualityReport eq = check_equality(index, g, n, dist.value);
      ev.method = "equality";
      ev.pass = eq.equal;
      ev.lhs = eq.lhs;
      ev.rhs = eq.rhs;
      if (!eq.inequality_holds) {
        ev.detail = "inequality violated (likely unstabilized data)";
      }
    }
    all_pass = all_pass && ev.pass;
    rep.evidence.push_back(std::move(ev));
  }
  rep.g_rich = all_pass;
  return rep;
}

inline RichnessReport g_rich_verdict(const MorphicSpec& spec, const SymmetryGroup& g,
                                     std::size_t n_max, StabilizeOptions opts = {}) {
  StabilizationResult st = stabilize(spec, n_max + 1, opts);
  return g_rich_verdict_on_index(st.index, st.stabilized, g, n_max);
}

// Deterministic DOT rendering: vertices and edges sorted by representative,
// loops as self-edges, labels are bracketed orbit representatives.
inline std::string to_dot(const SymGraph& graph, const std::string& name = "symmetries") {
  std::string out = "graph \"" + name + "\" {\n";
  for (const Orbit& v : graph.vertices) {
    out += "  \"[" + format_word(v.representative()) + "]\";\n";
  }
  for (const SymEdge& e : graph.edges) {
    out += "  \"[" + format_word(e.from) + "]\" -- \"[" + format_word(e.to) + "]\" [label=\"[" +
           format_word(e.words.representative()) + "]\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace wordsym
