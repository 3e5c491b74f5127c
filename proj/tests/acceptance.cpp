// Acceptance suite: one criterion per check, one pass/fail line each.
// Usage: wordsym_acceptance [criterion-number]      (no argument: run all)
// Exit code 0 when every executed criterion passes, 1 otherwise.

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wordsym/wordsym.hpp"

using namespace wordsym;

namespace {

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) failures_.push_back(what);
  }
  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      failures_.push_back(what + ": got " + to_str(got) + ", expected " + to_str(want));
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  static std::string to_str(const std::string& s) { return s; }
  static std::string to_str(const char* s) { return s; }
  static std::string to_str(std::size_t v) { return std::to_string(v); }
  static std::string to_str(int v) { return std::to_string(v); }
  static std::string to_str(const Rational& r) { return r.str(); }
  static std::string to_str(const std::set<std::string>& s) {
    std::string out = "{";
    for (const auto& x : s) out += x + ",";
    out += "}";
    return out;
  }
  std::vector<std::string> failures_;
};

const StabilizationResult& z201() {
  static StabilizationResult st = stabilize(catalog::sequence("z"), 201);
  return st;
}

const Word& z_100k() {
  static Word w = pipeline_prefix(catalog::sequence("z"), 100000);
  return w;
}

std::set<std::string> reps(const std::vector<Orbit>& orbits) {
  std::set<std::string> out;
  for (const Orbit& o : orbits) out.insert(format_word(o.representative()));
  return out;
}

std::set<std::string> edge_reps(const SymGraph& graph, bool loops) {
  std::set<std::string> out;
  for (const SymEdge& e : graph.edges) {
    if (e.loop == loops) out.insert(format_word(e.words.representative()));
  }
  return out;
}

// --- criteria -------------------------------------------------------------

void c01_factor_complexity(Checker& check) {
  const StabilizationResult& st = z201();
  check.expect(st.stabilized, "index of z must stabilize");
  const std::size_t expect_small[4] = {1, 3, 7, 12};
  for (std::size_t n = 0; n <= 3; ++n) {
    check.expect_eq(st.index.complexity(n), expect_small[n], "C(" + std::to_string(n) + ")");
  }
  for (std::size_t n = 4; n <= 200; ++n) {
    check.expect_eq(st.index.complexity(n), 4 * n + 2, "C(" + std::to_string(n) + ")");
  }
}

void c02_r_palindromic_complexity(Checker& check) {
  const StabilizationResult& st = z201();
  const GroupElement R = catalog::reversal(3);
  const std::size_t expect_small[4] = {1, 3, 3, 4};
  for (std::size_t n = 0; n <= 3; ++n) {
    check.expect_eq(st.index.theta_palindrome_count(n, R), expect_small[n],
                    "P_R(" + std::to_string(n) + ")");
  }
  for (std::size_t n = 5; n <= 199; n += 2) {
    check.expect_eq(st.index.theta_palindrome_count(n, R), std::size_t(2),
                    "P_R(" + std::to_string(n) + ")");
  }
  for (std::size_t n = 4; n <= 200; n += 2) {
    check.expect_eq(st.index.theta_palindrome_count(n, R), std::size_t(4),
                    "P_R(" + std::to_string(n) + ")");
  }
}

void c03_s_palindromic_complexity(Checker& check) {
  const StabilizationResult& st = z201();
  const GroupElement S = catalog::S();
  for (std::size_t n = 2; n <= 100; ++n) {
    check.expect(st.index.theta_palindrome_count(2 * n, S) >= 2,
                 "P_S(" + std::to_string(2 * n) + ") >= 2");
  }
  for (std::size_t m = 3; m <= 199; m += 2) {
    check.expect_eq(st.index.theta_palindrome_count(m, S), std::size_t(0),
                    "P_S(" + std::to_string(m) + ")");
  }
}

void c04_equality(Checker& check) {
  const StabilizationResult& st = z201();
  const SymmetryGroup g4 = catalog::group_ternary();
  for (std::size_t n = 3; n <= 100; ++n) {
    EqualityReport eq = check_equality(st.index, g4, n, 3);
    const std::size_t expect = n == 3 ? 10 : 8;
    check.expect_eq(eq.lhs, expect, "LHS at n=" + std::to_string(n));
    check.expect_eq(eq.rhs, expect, "RHS at n=" + std::to_string(n));
    check.expect(eq.inequality_holds, "inequality at n=" + std::to_string(n));
    check.expect(eq.equal, "equality at n=" + std::to_string(n));
  }
}

void c05_golden_graphs(Checker& check) {
  StabilizationResult u = stabilize(catalog::sequence("u"), 8);
  check.expect(u.stabilized, "index of u must stabilize");
  SymGraph gu = build_symmetry_graph(u.index, catalog::group_classical(5), 2,
                                     GraphBuildOptions{u.stabilized, false, true});
  check.expect_eq(reps(gu.vertices), std::set<std::string>{"01", "04"}, "Gamma_2(u) vertices");
  check.expect_eq(edge_reps(gu, true),
                  std::set<std::string>{"010", "10201", "10301", "040", "0440"},
                  "Gamma_2(u) loops");
  check.expect_eq(edge_reps(gu, false), std::set<std::string>{"104"}, "Gamma_2(u) edges");

  const SymmetryGroup g4 = catalog::group_ternary();
  SymGraph g1 = build_symmetry_graph(z201().index, g4, 1);
  check.expect_eq(reps(g1.vertices), std::set<std::string>{"0", "1"}, "Gamma_1(z) vertices");
  check.expect_eq(edge_reps(g1, true), std::set<std::string>{"00", "11"}, "Gamma_1(z) loops");
  check.expect_eq(edge_reps(g1, false), std::set<std::string>{"01"}, "Gamma_1(z) edges");

  SymGraph g2 = build_symmetry_graph(z201().index, g4, 2);
  check.expect_eq(reps(g2.vertices), std::set<std::string>{"00", "01"}, "Gamma_2(z) vertices");
  check.expect_eq(edge_reps(g2, true), std::set<std::string>{"010", "101", "0110"},
                  "Gamma_2(z) loops");
  check.expect_eq(edge_reps(g2, false), std::set<std::string>{"001"}, "Gamma_2(z) edges");
}

void c06_lemma1(Checker& check) {
  VerifyReport rep = verify_lemma1(5, 10000);
  check.expect(rep.pass, "f^n psi = psi phi^n for n <= 5 on letters and a 10^4 prefix");
}

void c07_prop2(Checker& check) {
  VerifyReport rep = verify_prop2(100000);
  check.expect(rep.pass, "the two z pipelines agree on 10^5 symbols and the letter table");
}

void c08_exponent_bounds(Checker& check) {
  BoundReport z = check_exponent_bound(z_100k(), 2000, threshold_ternary_rich());
  check.expect(z.holds, "z: every factor of length <= 2000 has exponent <= 1+1/(3-mu)");
  check.expect(Rational(9, 4) <= z.worst.exponent,
               "z: max exponent >= 9/4 (got " + z.worst.exponent.str() + ")");

  Word tm = pipeline_prefix(catalog::sequence("tm"), 10000);
  BoundReport t = check_exponent_bound(tm, 2000, threshold_tm());
  check.expect(t.holds, "tm: exponent bound 2 holds");
  check.expect_eq(t.worst.exponent, Rational(2), "tm: exponent 2 attained");

  for (const char* name : {"rote1", "rote2"}) {
    Word prefix = pipeline_prefix(catalog::sequence(name), 100000);
    BoundReport b = check_exponent_bound(prefix, 2000, threshold_binary_rich());
    check.expect(b.holds, std::string(name) + ": exponent bound 2+sqrt(2)/2 holds (max " +
                              b.worst.exponent.str() + ")");
  }
}

void c09_classical_richness(Checker& check) {
  check.expect_eq(richness_defect(WordView(z_100k()).substr(0, 10000)), std::size_t(0),
                  "defect of the 10^4 prefix of z");
  Word tm = pipeline_prefix(catalog::sequence("tm"), 64);
  auto first = first_defect_length(tm);
  check.expect(first.has_value() && *first <= 64, "tm: positive defect within 64 symbols");
  if (first) {
    check.expect_eq(*first, std::size_t(9), "tm: first defect length (frozen oracle value)");
  }
}

void c10_binary_claims(Checker& check) {
  const SymmetryGroup gb = catalog::group_binary();
  for (const char* name : {"rote1", "rote2"}) {
    StabilizationResult st = stabilize(catalog::sequence(name), 102);
    check.expect(st.stabilized, std::string(name) + " index must stabilize");
    ClosureReport closure = closure_check(st.index, gb, 101);
    check.expect(closure.closed, std::string(name) + " closed under {I,R,E,ER}");
    for (std::size_t n = 1; n <= 100; ++n) {
      check.expect_eq(st.index.complexity(n), 2 * n,
                      std::string(name) + " C(" + std::to_string(n) + ")");
    }
    RichnessReport rich = g_rich_verdict_on_index(st.index, st.stabilized, gb, 100);
    check.expect(rich.g_rich, std::string(name) + " G-rich up to 100");
  }
}

void c11_distinguishing(Checker& check) {
  DistinguishingReport rep = distinguishing_N(z201().index, catalog::group_ternary());
  check.expect(rep.found, "distinguishing length exists");
  check.expect_eq(rep.value, std::size_t(3), "distinguishing N of z under {I,R,S,RS}");
}

void c12_oracle_equivalence(Checker& check) {
  std::mt19937 rng(987654321);
  const std::vector<GroupElement> gens = {catalog::reversal(3), catalog::S()};
  const SymmetryGroup g4 = catalog::group_ternary();
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = oracle::random_word(rng, 20, 3);
    if (!w.empty()) {
      check.expect_eq(smallest_period(w), oracle::smallest_period(w),
                      "smallest_period(" + format_word(w) + ")");
    }
    check.expect_eq(richness_defect(w), oracle::richness_defect(w),
                    "richness_defect(" + format_word(w) + ")");
    auto lib_orbit = orbit(w, g4);
    auto brute = oracle::orbit(w, gens);
    check.expect(std::set<Word>(lib_orbit.begin(), lib_orbit.end()) == brute,
                 "orbit(" + format_word(w) + ")");
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Checker&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "factor complexity of z: C(0..3)=(1,3,7,12), C(n)=4n+2 for 4<=n<=200",
       c01_factor_complexity},
      {2, "R-palindromic complexity of z: (1,3,3,4), then 2 odd / 4 even up to 200",
       c02_r_palindromic_complexity},
      {3, "S-palindromic complexity of z: P_S(2n)>=2 for n<=100, odd lengths vanish",
       c03_s_palindromic_complexity},
      {4, "equality C(n+1)-C(n)+4 = sum P_Theta for 3<=n<=100 (10 at n=3, 8 after)",
       c04_equality},
      {5, "golden symmetry graphs: Gamma_2(u), Gamma_1(z), Gamma_2(z)", c05_golden_graphs},
      {6, "f^n psi = psi phi^n on letters (n<=5) and on a 10^4 prefix", c06_lemma1},
      {7, "both z pipelines agree on 10^5 symbols; explicit letter table", c07_prop2},
      {8, "exact exponent bounds for z, tm, rote1, rote2", c08_exponent_bounds},
      {9, "classical richness: z defect 0 at 10^4; tm first defect at 9", c09_classical_richness},
      {10, "rote sequences: closure, C(n)=2n, G-rich up to 100", c10_binary_claims},
      {11, "distinguishing length of z under {I,R,S,RS} is 3", c11_distinguishing},
      {12, "oracle equivalence on 1000 random words", c12_oracle_equivalence},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);
  int failures = 0;
  for (const Criterion& c : criteria()) {
    if (selected != 0 && c.id != selected) continue;
    Checker check;
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    if (check.failures().empty()) {
      std::printf("c%02d PASS %s\n", c.id, c.title);
    } else {
      ++failures;
      std::printf("c%02d FAIL %s\n", c.id, c.title);
      std::size_t show = std::min<std::size_t>(check.failures().size(), 4);
      for (std::size_t i = 0; i < show; ++i) {
        std::printf("     - %s\n", check.failures()[i].c_str());
      }
      if (check.failures().size() > show) {
        std::printf("     - ... and %zu more\n", check.failures().size() - show);
      }
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
