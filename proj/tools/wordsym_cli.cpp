// Command-line front end: define or load sequences and symmetry groups, run
// the analyses, and emit tables, reports and DOT graphs.
//
// Exit codes: 0 all good, 1 a verified claim is violated, 2 a result is
// unstabilized or a resource cap was hit, 3 configuration or usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "wordsym/wordsym.hpp"

namespace {

using namespace wordsym;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitPartial = 2;
constexpr int kExitConfig = 3;

struct Common {
  std::string seq;
  std::string group;
  std::string format;
  std::string out_path;
  std::size_t max_prefix = std::size_t(1) << 20;
  double max_seconds = 0;
  bool timing = false;
};

struct Resolved {
  std::string name;  // catalog name or config path
  MorphicSpec spec;
  SymmetryGroup group;
};

bool is_catalog_name(const std::string& s) {
  for (const std::string& name : catalog::sequence_names()) {
    if (s == name || (name == "tm" && s == "t")) return true;
  }
  return false;
}

Resolved resolve(const Common& c, bool need_group = true) {
  std::optional<SymmetryGroup> config_group;
  std::optional<MorphicSpec> spec;
  if (is_catalog_name(c.seq)) {
    spec = catalog::sequence(c.seq);
  } else {
    SequenceConfig cfg = load_sequence_config(c.seq);
    spec = std::move(cfg.spec);
    config_group = std::move(cfg.group);
  }
  int out_alphabet = spec->output_alphabet().size();
  SymmetryGroup group = [&] {
    if (!c.group.empty()) return catalog::group_by_name(c.group, out_alphabet);
    if (config_group) return *config_group;
    if (is_catalog_name(c.seq)) return catalog::default_group(c.seq);
    (void)need_group;
    return catalog::group_classical(out_alphabet);
  }();
  if (group.alphabet_size() != out_alphabet) {
    throw spec_error("group alphabet does not match the sequence alphabet");
  }
  return Resolved{c.seq, std::move(*spec), std::move(group)};
}

StabilizeOptions stabilize_options(const Common& c, std::size_t initial = 0) {
  StabilizeOptions opts;
  opts.max_prefix_length = c.max_prefix;
  opts.max_seconds = c.max_seconds;
  opts.initial_length = initial;
  return opts;
}

void write_output(const Common& c, const std::string& content) {
  if (c.out_path.empty() || c.out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw spec_error("cannot open output file " + c.out_path);
  out << content;
}

int cmd_generate(const Common& c, std::size_t length) {
  Resolved r = resolve(c, false);
  if (length > c.max_prefix) {
    std::cerr << "requested length exceeds --max-prefix\n";
    return kExitPartial;
  }
  Word prefix = pipeline_prefix(r.spec, length);
  if (c.out_path.empty() || c.out_path == "-") {
    if (!prefix.empty()) std::cout << format_word(prefix) << "\n";
  } else {
    save_prefix(c.out_path, r.spec, prefix);
  }
  return kExitOk;
}

int cmd_complexity(const Common& c, std::size_t n_max) {
  Resolved r = resolve(c);
  StabilizationResult st = stabilize(r.spec, n_max + 1, stabilize_options(c));
  ComplexityTable table = st.table;
  table.n_max = n_max;
  table.values.resize(n_max + 1);
  table.stable.resize(n_max + 1);
  std::vector<PalComplexityTable> pals;
  for (const GroupElement& theta : r.group.involutive_antimorphisms()) {
    pals.push_back(pal_complexity_table(st.index, theta, n_max, st.stabilized));
  }
  if (c.format == "csv") {
    write_output(c, complexity_csv(table, pals));
  } else if (c.format == "json") {
    nlohmann::json j = complexity_json(table, pals);
    j["sequence"] = r.name;
    write_output(c, j.dump(2) + "\n");
  } else {
    std::string text = "sequence " + r.name + ", prefix " + std::to_string(table.prefix_length) +
                       (st.stabilized ? " (stabilized)\n" : " (NOT stabilized)\n");
    text += complexity_csv(table, pals);
    write_output(c, text);
  }
  return st.stabilized ? kExitOk : kExitPartial;
}

int cmd_graph(const Common& c, std::size_t n) {
  Resolved r = resolve(c);
  StabilizeOptions opts = stabilize_options(c, std::max<std::size_t>(32768, 8 * (n + 2)));
  StabilizationResult st = stabilize(r.spec, n + 1, opts);
  SymGraph graph = build_symmetry_graph(st.index, r.group, n,
                                        GraphBuildOptions{st.stabilized, false, true});
  std::string name = "gamma_" + std::to_string(n) + "_" + r.name;
  if (c.format == "json") {
    nlohmann::json verts = nlohmann::json::array(), edges = nlohmann::json::array();
    for (const Orbit& v : graph.vertices) verts.push_back(format_word(v.representative()));
    for (const SymEdge& e : graph.edges) {
      edges.push_back({{"orbit", format_word(e.words.representative())},
                       {"from", format_word(e.from)},
                       {"to", format_word(e.to)},
                       {"loop", e.loop}});
    }
    nlohmann::json j{{"order", n},
                     {"sequence", r.name},
                     {"vertices", verts},
                     {"edges", edges},
                     {"stabilized", st.stabilized},
                     {"prefix_length", st.table.prefix_length}};
    write_output(c, j.dump(2) + "\n");
  } else {
    write_output(c, to_dot(graph, name));
  }
  return st.stabilized ? kExitOk : kExitPartial;
}

int cmd_richness(const Common& c, std::size_t n_max) {
  Resolved r = resolve(c);
  RichnessReport rep = g_rich_verdict(r.spec, r.group, n_max, stabilize_options(c));
  if (c.format == "text") {
    std::string text = "sequence " + r.name + ": " +
                       (rep.g_rich ? "G-rich up to " + std::to_string(n_max)
                                   : "NOT G-rich (see evidence)") +
                       "\n";
    for (const RichnessEvidence& ev : rep.evidence) {
      if (!ev.pass) {
        text += "  first failure at n=" + std::to_string(ev.n) + " via " + ev.method + "\n";
        break;
      }
    }
    write_output(c, text);
  } else {
    nlohmann::json j = richness_json(rep);
    j["sequence"] = r.name;
    write_output(c, j.dump(2) + "\n");
  }
  if (!rep.stabilized) return kExitPartial;
  return rep.g_rich ? kExitOk : kExitViolated;
}

int cmd_critexp(const Common& c, std::string threshold_name, std::size_t max_len,
                std::size_t prefix_len) {
  Resolved r = resolve(c, false);
  if (threshold_name == "auto") {
    if (r.name == "z" || r.name == "z_xi") {
      threshold_name = "ternary_rich";
    } else if (r.name == "rote1" || r.name == "rote2") {
      threshold_name = "binary_rich";
    } else if (r.name == "tm" || r.name == "t") {
      threshold_name = "tm";
    } else {
      throw spec_error("no default threshold for this sequence; pass --threshold");
    }
  }
  Threshold threshold = threshold_by_name(threshold_name);
  if (prefix_len > c.max_prefix) prefix_len = c.max_prefix;
  Word prefix = pipeline_prefix(r.spec, prefix_len);
  BoundReport rep = check_exponent_bound(prefix, max_len, threshold);
  if (c.format == "text") {
    std::string text = "sequence " + r.name + ": max exponent " + rep.worst.exponent.str() +
                       " (~" + std::to_string(rep.worst.exponent.approx()) + "), bound " +
                       threshold_name + (rep.holds ? " holds\n" : " VIOLATED\n");
    write_output(c, text);
  } else {
    write_output(c, exponent_json(r.name, prefix_len, max_len, threshold_name, threshold, rep)
                            .dump(2) +
                        "\n");
  }
  return rep.holds ? kExitOk : kExitViolated;
}

int cmd_verify(const Common& c, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = verify_suite_names();
  } else {
    names.push_back(suite);
  }
  nlohmann::json reports = nlohmann::json::array();
  bool all_pass = true;
  bool all_stable = true;
  for (const std::string& name : names) {
    VerifyReport rep = run_verify_suite(name, stabilize_options(c));
    all_pass = all_pass && rep.pass;
    all_stable = all_stable && rep.stabilized;
    if (c.format == "text") {
      std::printf("%-12s %s\n", rep.claim.c_str(), rep.pass ? "pass" : "FAIL");
    } else {
      reports.push_back(rep.to_json(c.timing));
    }
  }
  if (c.format != "text") write_output(c, reports.dump(2) + "\n");
  if (!all_pass) return kExitViolated;
  if (!all_stable) return kExitPartial;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics-on-words toolkit: morphic sequences, factor and palindromic "
               "complexity, symmetry graphs, G-richness and critical exponents"};
  app.require_subcommand(1);

  Common c;
  app.add_option("--max-prefix", c.max_prefix, "hard cap on generated prefix length")
      ->envname("WORDSYM_MAX_PREFIX");
  app.add_option("--max-seconds", c.max_seconds, "soft time cap for stabilization")
      ->envname("WORDSYM_MAX_SECONDS");

  auto add_seq = [&](CLI::App* cmd) {
    cmd->fallthrough();  // let --max-prefix / --max-seconds appear after the subcommand
    cmd->add_option("--seq", c.seq, "catalog sequence (x,y,z,z_xi,u,rote1,rote2,tm) or config file")
        ->required();
    cmd->add_option("--group", c.group, "group: classical, ternary, binary");
    cmd->add_option("--out", c.out_path, "output path (default stdout)");
  };

  auto* gen = app.add_subcommand("generate", "write a prefix of a sequence");
  std::size_t gen_length = 0;
  add_seq(gen);
  gen->add_option("--length", gen_length, "number of symbols")->required();

  auto* cpx = app.add_subcommand("complexity", "factor and palindromic complexity table");
  std::size_t cpx_nmax = 20;
  add_seq(cpx);
  cpx->add_option("--nmax", cpx_nmax, "largest factor length");
  cpx->add_option("--format", c.format, "csv, json or text")->default_str("csv");

  auto* grf = app.add_subcommand("graph", "graph of symmetries of a given order");
  std::size_t grf_n = 1;
  add_seq(grf);
  grf->add_option("-n,--order", grf_n, "graph order")->required();
  grf->add_option("--format", c.format, "dot or json")->default_str("dot");

  auto* rich = app.add_subcommand("richness", "G-richness verdict with per-n evidence");
  std::size_t rich_nmax = 100;
  add_seq(rich);
  rich->add_option("--nmax", rich_nmax, "check orders 1..nmax");
  rich->add_option("--format", c.format, "json or text")->default_str("json");

  auto* crit = app.add_subcommand("critexp", "max exponent and exact threshold verdict");
  std::string crit_threshold = "auto";
  std::size_t crit_maxlen = 2000, crit_prefix = 100000;
  add_seq(crit);
  crit->add_option("--threshold", crit_threshold,
                   "tm, binary_rich, ternary_rich, a rational p/q, or auto");
  crit->add_option("--maxlen", crit_maxlen, "factor length cap");
  crit->add_option("--prefix-len", crit_prefix, "prefix length to scan");
  crit->add_option("--format", c.format, "json or text")->default_str("json");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->fallthrough();
  std::string ver_suite = "all";
  ver->add_option("--suite", ver_suite, "suite name or 'all'");
  ver->add_option("--format", c.format, "json or text")->default_str("json");
  ver->add_option("--out", c.out_path, "output path (default stdout)");
  ver->add_flag("--timing", c.timing, "include wall times in a volatile field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (c.format.empty()) {
    c.format = cpx->parsed() ? "csv" : (grf->parsed() ? "dot" : "json");
  }

  try {
    if (gen->parsed()) return cmd_generate(c, gen_length);
    if (cpx->parsed()) return cmd_complexity(c, cpx_nmax);
    if (grf->parsed()) return cmd_graph(c, grf_n);
    if (rich->parsed()) return cmd_richness(c, rich_nmax);
    if (crit->parsed()) return cmd_critexp(c, crit_threshold, crit_maxlen, crit_prefix);
    if (ver->parsed()) return cmd_verify(c, ver_suite);
  } catch (const spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
