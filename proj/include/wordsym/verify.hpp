#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordsym/catalog.hpp"
#include "wordsym/exponent.hpp"
#include "wordsym/palindrome.hpp"
#include "wordsym/stabilize.hpp"
#include "wordsym/symmetry_graph.hpp"

namespace wordsym {

// One verification suite per claim of the source material; each returns a
// structured report and never throws on a failed claim (only on misuse).
struct VerifyReport {
  std::string claim;
  bool pass = true;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  std::size_t prefix_length = 0;
  bool stabilized = true;
  double wall_seconds = 0;

  void fail(nlohmann::json witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }

  nlohmann::json to_json(bool with_timing = false) const {
    nlohmann::json j{{"claim", claim},
                     {"pass", pass},
                     {"params", params},
                     {"witnesses", witnesses},
                     {"prefix_length", prefix_length},
                     {"stabilized", stabilized}};
    if (with_timing) j["volatile"] = {{"wall_seconds", wall_seconds}};
    return j;
  }
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
    return d.count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline nlohmann::json equality_json(const EqualityReport& eq) {
  return {{"n", eq.n}, {"lhs", eq.lhs}, {"rhs", eq.rhs}};
}

}  // namespace detail

// f^n psi = psi phi^n on every letter for n <= n_max, and on a prefix of
// phi^omega(0) applied stepwise.
inline VerifyReport verify_lemma1(int n_max, std::size_t prefix_len = 10000) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "lemma1";
  rep.params = {{"n_max", n_max}, {"prefix_len", prefix_len}};
  const Morphism f = catalog::f(), psi = catalog::psi(), phi = catalog::phi();
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Morphism> lhs, rhs;
    for (int i = 0; i < n; ++i) lhs.push_back(f);
    lhs.push_back(psi);
    rhs.push_back(psi);
    for (int i = 0; i < n; ++i) rhs.push_back(phi);
    Word probe = n == n_max ? fixed_point_prefix(phi, 0, prefix_len) : Word();
    CommutationReport c = verify_commutation(lhs, rhs, probe);
    if (!c.equal) rep.fail({{"n", n}, {"witness", c.witness}});
  }
  rep.prefix_length = prefix_len;
  rep.wall_seconds = timer.seconds();
  return rep;
}

// The two pipelines for z agree on their first L symbols; the composed
// letter tables tau(g psi) and g psi match the explicit images.
inline VerifyReport verify_prop2(std::size_t agree_len = 100000) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "prop2";
  rep.params = {{"agree_len", agree_len}};

  const Morphism g_psi = compose(catalog::g(), catalog::psi());
  const std::vector<std::string> g_psi_expect = {"20", "21", "22", "2202", "22021202"};
  for (int c = 0; c < 5; ++c) {
    Word got = g_psi.image(static_cast<Letter>(c));
    if (format_word(got) != g_psi_expect[c]) {
      rep.fail({{"table", "g psi"}, {"letter", c}, {"got", format_word(got)}});
    }
  }

  const Morphism tau_g_psi = compose_transduced(catalog::tau(), g_psi);
  const std::string A = catalog::word_A(), B = catalog::word_B(), C = catalog::word_C(),
                    D = catalog::word_D();
  const std::vector<std::string> tgp_expect = {A + A + D, A + A + C, A + A + C + C,
                                               A + A + C + C + B + C + C,
                                               A + A + C + C + B + C + C + A + C + C + B + C + C};
  for (int c = 0; c < 5; ++c) {
    Word got = tau_g_psi.image(static_cast<Letter>(c));
    if (format_word(got) != tgp_expect[c]) {
      rep.fail({{"table", "tau g psi"}, {"letter", c}, {"got", format_word(got)}});
    }
  }

  // tau g psi = xi phi as morphisms
  CommutationReport c = verify_commutation({tau_g_psi}, {catalog::xi(), catalog::phi()});
  if (!c.equal) rep.fail({{"table", "tau g psi vs xi phi"}, {"witness", c.witness}});

  Word z1 = pipeline_prefix(catalog::sequence("z"), agree_len);
  Word z2 = pipeline_prefix(catalog::sequence("z_xi"), agree_len);
  if (z1 != z2) {
    std::size_t i = 0;
    while (i < z1.size() && z1[i] == z2[i]) ++i;
    rep.fail({{"pipelines", "first mismatch"}, {"position", i}});
  }
  rep.prefix_length = agree_len;
  rep.wall_seconds = timer.seconds();
  return rep;
}

// Factor and R-palindromic complexity of z, plus S-closure of its language.
inline VerifyReport verify_prop5(std::size_t n_max = 200, StabilizeOptions opts = {}) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "prop5";
  rep.params = {{"n_max", n_max}};
  StabilizationResult st = stabilize(catalog::sequence("z"), n_max + 1, opts);
  rep.prefix_length = st.table.prefix_length;
  rep.stabilized = st.stabilized;
  if (!st.stabilized) rep.fail({{"error", "index did not stabilize within the resource cap"}});

  const std::vector<std::size_t> c_small = {1, 3, 7, 12};
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::size_t expect = n < 4 ? c_small[n] : 4 * n + 2;
    if (st.index.complexity(n) != expect) {
      rep.fail({{"table", "C"}, {"n", n}, {"got", st.index.complexity(n)}, {"expect", expect}});
    }
  }
  const GroupElement R = catalog::reversal(3);
  const std::vector<std::size_t> pr_small = {1, 3, 3, 4};
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::size_t expect = n < 4 ? pr_small[n] : (n % 2 == 1 ? 2 : 4);
    std::size_t got = st.index.theta_palindrome_count(n, R);
    if (got != expect) {
      rep.fail({{"table", "P_R"}, {"n", n}, {"got", got}, {"expect", expect}});
    }
  }
  ClosureReport closure = closure_check(st.index, catalog::group_ternary(), n_max);
  if (!closure.closed) {
    rep.fail({{"closure", "violated"},
              {"element", closure.witness_element},
              {"factor", format_word(closure.witness_factor)}});
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

// S-palindrome propagation: every factor w of u with xi(w)00 an S-palindrome
// keeps that property through `depth` applications of phi.
inline VerifyReport verify_lemma7(int depth = 3, std::size_t max_factor_len = 8,
                                  StabilizeOptions opts = {}) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "lemma7";
  rep.params = {{"depth", depth}, {"max_factor_len", max_factor_len}};
  StabilizationResult st = stabilize(catalog::sequence("u"), max_factor_len + 1, opts);
  rep.prefix_length = st.table.prefix_length;
  rep.stabilized = st.stabilized;

  const Morphism xi = catalog::xi(), phi = catalog::phi();
  const GroupElement S = catalog::S();
  auto is_pal_form = [&](const Word& w) {
    Word v = xi.apply(w);
    v.push_back(0);
    v.push_back(0);
    return FactorIndex::is_theta_fixed(v, S);
  };
  std::size_t seeds = 0;
  for (std::size_t n = 0; n <= max_factor_len; ++n) {
    for (std::size_t i = 0; i < st.index.entry_count(n); ++i) {
      Word w = n == 0 ? Word() : Word(st.index.factor_view(n, i));
      if (!is_pal_form(w)) continue;
      ++seeds;
      Word v = w;
      for (int d = 1; d <= depth; ++d) {
        v = phi.apply(v);
        if (!is_pal_form(v)) {
          rep.fail({{"seed", format_word(w)}, {"depth", d}, {"word", format_word(v)}});
          break;
        }
      }
    }
  }
  rep.params["seeds_checked"] = seeds;
  rep.wall_seconds = timer.seconds();
  return rep;
}

// P_S(2n) >= 2 for 2 <= n <= n_max; no odd S-palindromic factor of length
// >= 3; exact counts recorded. Also exercises the x_k family membership.
inline VerifyReport verify_prop8(std::size_t n_max = 100, StabilizeOptions opts = {}) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "prop8";
  rep.params = {{"n_max", n_max}};
  StabilizationResult st = stabilize(catalog::sequence("z"), 2 * n_max + 2, opts);
  rep.prefix_length = st.table.prefix_length;
  rep.stabilized = st.stabilized;
  if (!st.stabilized) rep.fail({{"error", "index did not stabilize within the resource cap"}});

  const GroupElement S = catalog::S();
  nlohmann::json exact = nlohmann::json::array();
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::size_t even_count = st.index.theta_palindrome_count(2 * n, S);
    exact.push_back(even_count);
    if (even_count < 2) {
      rep.fail({{"P_S", 2 * n}, {"got", even_count}, {"expect", ">= 2"}});
    }
  }
  rep.params["P_S_even_from_4"] = exact;
  for (std::size_t m = 3; m <= 2 * n_max + 1; m += 2) {
    std::size_t odd_count = st.index.theta_palindrome_count(m, S);
    if (odd_count != 0) {
      rep.fail({{"P_S", m}, {"got", odd_count}, {"expect", 0}});
    }
  }
  const Word family_prefix = pipeline_prefix(catalog::sequence("z"), 100000);
  for (int k = 0; k <= 4; ++k) {
    try {
      catalog::s_palindrome_family(k, &family_prefix);
    } catch (const contract_error& e) {
      rep.fail({{"x_k", k}, {"error", e.what()}});
    }
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

// Theorem 9: z is G-rich for G = {I,R,S,RS}, with the order-1 and order-2
// graphs matching the proof's explicit description.
inline VerifyReport verify_thm9(std::size_t n_max = 100, StabilizeOptions opts = {}) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "thm9";
  rep.params = {{"n_max", n_max}};
  const SymmetryGroup g = catalog::group_ternary();
  StabilizationResult st = stabilize(catalog::sequence("z"), n_max + 2, opts);
  rep.prefix_length = st.table.prefix_length;
  rep.stabilized = st.stabilized;

  auto graph_sets = [&](const SymGraph& graph) {
    nlohmann::json j{{"vertices", nlohmann::json::array()},
                     {"loops", nlohmann::json::array()},
                     {"edges", nlohmann::json::array()}};
    for (const Orbit& v : graph.vertices) j["vertices"].push_back(format_word(v.representative()));
    for (const SymEdge& e : graph.edges) {
      j[e.loop ? "loops" : "edges"].push_back(format_word(e.words.representative()));
    }
    return j;
  };
  auto expect_sets = [&](const SymGraph& graph, std::vector<std::string> verts,
                         std::vector<std::string> loops, std::vector<std::string> edges) {
    nlohmann::json got = graph_sets(graph);
    nlohmann::json want{{"vertices", verts}, {"loops", loops}, {"edges", edges}};
    if (got != want) {
      rep.fail({{"graph_order", graph.order}, {"got", got}, {"expect", want}});
    }
  };
  GraphBuildOptions gopts{st.stabilized, !st.stabilized, true};
  expect_sets(build_symmetry_graph(st.index, g, 1, gopts), {"0", "1"}, {"00", "11"}, {"01"});
  expect_sets(build_symmetry_graph(st.index, g, 2, gopts), {"00", "01"}, {"010", "0110", "101"},
              {"001"});

  RichnessReport rich = g_rich_verdict_on_index(st.index, st.stabilized, g, n_max);
  if (!rich.g_rich) {
    for (const RichnessEvidence& ev : rich.evidence) {
      if (!ev.pass) {
        rep.fail({{"richness", "failed"}, {"n", ev.n}, {"method", ev.method}, {"lhs", ev.lhs},
                  {"rhs", ev.rhs}});
        break;
      }
    }
    if (!rich.closure_ok) rep.fail({{"closure", rich.closure_witness}});
  }
  for (const RichnessEvidence& ev : rich.evidence) {
    if (ev.method != "equality") continue;
    std::size_t expect = ev.n == 3 ? 10 : 8;
    if (ev.n >= 3 && (ev.lhs != expect || ev.rhs != expect)) {
      rep.fail({{"equality_value", detail::equality_json(
                                       EqualityReport{ev.n, ev.lhs, ev.rhs, false, false})},
                {"expect", expect}});
    }
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

// Section-6 claims for the two Rote sequences: closure under {I,R,E,ER},
// C(n) = 2n, G-richness, and the critical-exponent bound 2 + sqrt(2)/2.
inline VerifyReport verify_binary(std::size_t n_max = 100, std::size_t exponent_len = 2000,
                                  std::size_t exponent_prefix = 100000,
                                  StabilizeOptions opts = {}) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "binary";
  rep.params = {{"n_max", n_max},
                {"exponent_len", exponent_len},
                {"exponent_prefix", exponent_prefix}};
  const SymmetryGroup g = catalog::group_binary();
  const Threshold bound = threshold_binary_rich();

  for (const std::string name : {"rote1", "rote2"}) {
    StabilizationResult st = stabilize(catalog::sequence(name), n_max + 2, opts);
    rep.prefix_length = std::max(rep.prefix_length, st.table.prefix_length);
    rep.stabilized = rep.stabilized && st.stabilized;

    ClosureReport closure = closure_check(st.index, g, n_max + 1);
    if (!closure.closed) {
      rep.fail({{"sequence", name},
                {"closure", closure.witness_element},
                {"factor", format_word(closure.witness_factor)}});
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (st.index.complexity(n) != 2 * n) {
        rep.fail({{"sequence", name}, {"C", n}, {"got", st.index.complexity(n)}});
      }
    }
    RichnessReport rich = g_rich_verdict_on_index(st.index, st.stabilized, g, n_max);
    if (!rich.g_rich) rep.fail({{"sequence", name}, {"richness", "failed"}});

    Word long_prefix = pipeline_prefix(catalog::sequence(name), exponent_prefix);
    BoundReport b = check_exponent_bound(long_prefix, exponent_len, bound);
    if (!b.holds) {
      rep.fail({{"sequence", name},
                {"exponent_bound", "violated"},
                {"exponent", b.worst.exponent.str()},
                {"witness", format_word(b.worst.factor)}});
    }
    rep.params[name + "_max_exponent"] = b.worst.exponent.str();
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

// Thue-Morse: exponent bound 2 attained, G-rich for {I,R,E,ER}, and not rich
// in the classical sense.
inline VerifyReport verify_thue_morse(std::size_t n_max = 100, std::size_t exponent_len = 2000,
                                      std::size_t exponent_prefix = 10000,
                                      StabilizeOptions opts = {}) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "thue_morse";
  rep.params = {{"n_max", n_max},
                {"exponent_len", exponent_len},
                {"exponent_prefix", exponent_prefix}};
  Word prefix = pipeline_prefix(catalog::sequence("tm"), exponent_prefix);

  BoundReport b = check_exponent_bound(prefix, exponent_len, threshold_tm());
  if (!b.holds) rep.fail({{"exponent_bound", "violated"}, {"exponent", b.worst.exponent.str()}});
  if (!(b.worst.exponent == Rational(2))) {
    rep.fail({{"exponent_attained", b.worst.exponent.str()}, {"expect", "2"}});
  } else {
    rep.params["square_witness"] = format_word(b.worst.factor);
  }

  StabilizationResult st = stabilize(catalog::sequence("tm"), n_max + 2, opts);
  rep.prefix_length = st.table.prefix_length;
  rep.stabilized = st.stabilized;
  RichnessReport rich = g_rich_verdict_on_index(st.index, st.stabilized,
                                                catalog::group_binary(), n_max);
  if (!rich.g_rich) rep.fail({{"richness", "failed"}});

  auto first = first_defect_length(WordView(prefix).substr(0, 64));
  if (!first) {
    rep.fail({{"classical_defect", "no positive defect within 64 symbols"}});
  } else {
    rep.params["first_defect_length"] = *first;
  }
  rep.wall_seconds = timer.seconds();
  return rep;
}

// Certified enclosures for the named repetition thresholds.
inline VerifyReport verify_constants() {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.claim = "constants";
  auto mu = mu_interval();
  // the enclosure must lie inside (2.20, 2.21) and show a sign change
  if (!(Rational(220, 100) < mu.first && mu.second < Rational(221, 100))) {
    rep.fail({{"mu_interval", {mu.first.str(), mu.second.str()}}});
  }
  if (mu_poly_sign(BigInt(mu.first.num), BigInt(mu.first.den)) != Sign::negative ||
      mu_poly_sign(BigInt(mu.second.num), BigInt(mu.second.den)) != Sign::positive) {
    rep.fail({{"mu_sign_change", "missing"}});
  }
  auto ternary = threshold_ternary_rich().interval();
  // |value - 2.25876324| <= 1e-8 for both endpoints
  auto close = [](const Rational& x) {
    // |x - 225876324/1e8| <= 1/1e8  <=>  |1e8 x.num - 225876324 x.den| <= x.den
    __int128 lhs = static_cast<__int128>(x.num) * 100000000 -
                   static_cast<__int128>(225876324) * x.den;
    if (lhs < 0) lhs = -lhs;
    return lhs <= x.den;
  };
  if (!close(ternary.first) || !close(ternary.second)) {
    rep.fail({{"ternary_rich_interval", {ternary.first.str(), ternary.second.str()}}});
  }
  auto binary = threshold_binary_rich().interval();
  if (!(Rational(27071067, 10000000) < binary.first &&
        binary.second < Rational(27071068, 10000000))) {
    rep.fail({{"binary_rich_interval", {binary.first.str(), binary.second.str()}}});
  }
  rep.params["mu"] = {mu.first.str(), mu.second.str()};
  rep.params["ternary_rich"] = {ternary.first.str(), ternary.second.str()};
  rep.params["binary_rich"] = {binary.first.str(), binary.second.str()};
  rep.wall_seconds = timer.seconds();
  return rep;
}

inline std::vector<std::string> verify_suite_names() {
  return {"lemma1", "prop2", "prop5", "lemma7", "prop8", "thm9", "binary", "thue_morse",
          "constants"};
}

inline VerifyReport run_verify_suite(const std::string& name, StabilizeOptions opts = {}) {
  if (name == "lemma1") return verify_lemma1(5);
  if (name == "prop2") return verify_prop2();
  if (name == "prop5") return verify_prop5(200, opts);
  if (name == "lemma7") return verify_lemma7(3, 8, opts);
  if (name == "prop8") return verify_prop8(100, opts);
  if (name == "thm9") return verify_thm9(100, opts);
  if (name == "binary") return verify_binary(100, 2000, 100000, opts);
  if (name == "thue_morse") return verify_thue_morse(100, 2000, 10000, opts);
  if (name == "constants") return verify_constants();
  throw spec_error("unknown verify suite: " + name);
}

}  // namespace wordsym
