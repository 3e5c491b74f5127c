#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wordsym/exponent.hpp"
#include "wordsym/stabilize.hpp"
#include "wordsym/symmetry_graph.hpp"

namespace wordsym {

// CSV: n, C, one P column per involutive antimorphism, stabilized flag.
inline std::string complexity_csv(const ComplexityTable& table,
                                  const std::vector<PalComplexityTable>& pal_tables) {
  std::string out = "n,C";
  for (const PalComplexityTable& p : pal_tables) out += ",P_" + element_label(p.theta);
  out += ",stabilized\n";
  for (std::size_t n = 0; n <= table.n_max; ++n) {
    out += std::to_string(n) + "," + std::to_string(table.values[n]);
    for (const PalComplexityTable& p : pal_tables) out += "," + std::to_string(p.values[n]);
    out += table.stable[n] && table.stabilized ? ",1\n" : ",0\n";
  }
  return out;
}

inline nlohmann::json complexity_json(const ComplexityTable& table,
                                      const std::vector<PalComplexityTable>& pal_tables) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n <= table.n_max; ++n) {
    nlohmann::json row{{"n", n},
                       {"C", table.values[n]},
                       {"stabilized", table.stable[n] && table.stabilized}};
    for (const PalComplexityTable& p : pal_tables) {
      row["P_" + element_label(p.theta)] = p.values[n];
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", rows},
                        {"prefix_length", table.prefix_length},
                        {"stabilized", table.stabilized},
                        {"doublings", table.doublings}};
}

inline nlohmann::json richness_json(const RichnessReport& rep) {
  nlohmann::json evidence = nlohmann::json::array();
  for (const RichnessEvidence& ev : rep.evidence) {
    nlohmann::json e{{"n", ev.n}, {"method", ev.method}, {"pass", ev.pass}};
    if (ev.method == "equality") {
      e["lhs"] = ev.lhs;
      e["rhs"] = ev.rhs;
    }
    if (!ev.detail.empty()) e["detail"] = ev.detail;
    evidence.push_back(std::move(e));
  }
  nlohmann::json j{{"g_rich_up_to_n_max", rep.g_rich},
                   {"n_max", rep.n_max},
                   {"closure_ok", rep.closure_ok},
                   {"distinguishing_found", rep.distinguishing_found},
                   {"distinguishing_N", rep.distinguishing},
                   {"stabilized", rep.stabilized},
                   {"prefix_length", rep.prefix_length},
                   {"evidence", evidence}};
  if (!rep.closure_witness.empty()) j["closure_witness"] = rep.closure_witness;
  return j;
}

inline nlohmann::json exponent_json(const std::string& sequence, std::size_t prefix_len,
                                    std::size_t max_len, const std::string& threshold_name,
                                    const Threshold& threshold, const BoundReport& report) {
  auto interval = threshold.interval();
  return nlohmann::json{{"sequence", sequence},
                        {"prefix_length", prefix_len},
                        {"max_factor_length", max_len},
                        {"threshold", threshold_name},
                        {"threshold_form", threshold.str()},
                        {"threshold_interval", {interval.first.str(), interval.second.str()}},
                        {"bound_holds", report.holds},
                        {"max_exponent", report.worst.exponent.str()},
                        {"max_exponent_approx", report.worst.exponent.approx()},
                        {"witness", format_word(report.worst.factor)},
                        {"witness_length", report.worst.factor.size()},
                        {"witness_period", report.worst.period}};
}

}  // namespace wordsym
