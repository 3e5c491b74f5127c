#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wordsym/algebraic.hpp"
#include "wordsym/factor_index.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

// Least p >= 1 with w[i] == w[i+p] for all i; classic border computation,
// p = |w| - (longest proper border of w).
inline std::size_t smallest_period(WordView w) {
  if (w.empty()) throw contract_error("smallest_period: empty word");
  std::vector<std::size_t> border(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return w.size() - border[w.size()];
}

// A factor, its smallest period, and the exact exponent |w|/p.
struct ExponentRecord {
  Word factor;
  std::size_t period = 1;
  Rational exponent{1, 1};
};

namespace detail {

// Largest factor length with period p in `text`: p plus the longest stretch
// of positions agreeing at lag p. Zero when no position agrees.
inline std::size_t max_run_length(WordView text, std::size_t p) {
  const std::size_t n = text.size();
  std::size_t best = 0;
  std::size_t i = 0;
  while (i + p < n) {
    if (text[i] != text[i + p]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + p < n && text[j] == text[j + p]) ++j;
    best = std::max(best, (j - i) + p);
    i = j + 1;
  }
  return best;
}

// Start positions of length-m factors with period p (not necessarily
// smallest), i.e. windows fully inside an agreement stretch at lag p.
inline std::vector<std::size_t> period_window_starts(WordView text, std::size_t p,
                                                     std::size_t m) {
  std::vector<std::size_t> out;
  const std::size_t n = text.size();
  const std::size_t agree_needed = m - p;
  std::size_t i = 0;
  while (i + p < n) {
    if (text[i] != text[i + p]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + p < n && text[j] == text[j + p]) ++j;
    if (j - i >= agree_needed) {
      for (std::size_t s = i; s + agree_needed <= j; ++s) {
        if (s + m <= n) out.push_back(s);
      }
    }
    i = j + 1;
  }
  return out;
}

}  // namespace detail

// Maximum exact exponent |w|/p over factors of `text` with |w| <= max_len,
// p the smallest period of w. Ties: shortest witness, then lexicographically
// least. The lag scan is exhaustive: every factor with smallest period p lies
// inside a maximal agreement stretch at lag p, and conversely every stretch
// realizes an actual factor.
inline ExponentRecord max_exponent(WordView text, std::size_t max_len) {
  if (text.empty()) throw contract_error("max_exponent: empty index");
  if (max_len > text.size()) max_len = text.size();
  if (max_len == 0) throw contract_error("max_exponent: zero length cap");

  Rational best(1);
  const std::size_t p_cap = max_len >= 2 ? max_len - 1 : 0;
  std::vector<std::size_t> runs(p_cap + 1, 0);
  for (std::size_t p = 1; p <= p_cap; ++p) {
    std::size_t run = detail::max_run_length(text, p);
    if (run == 0) continue;
    runs[p] = run;
    Rational e(static_cast<std::int64_t>(std::min(run, max_len)),
               static_cast<std::int64_t>(p));
    if (best < e) best = e;
  }

  ExponentRecord record;
  record.exponent = best;
  if (best == Rational(1)) {
    // no repetition at all: witness is the least letter present
    char least = *std::min_element(text.begin(), text.end());
    record.factor = Word(1, least);
    record.period = 1;
    return record;
  }
  // shortest witness: smallest p that realizes best = a/b, i.e. b | p and a
  // scaled window fits in a run.
  for (std::size_t p = static_cast<std::size_t>(best.den); p <= p_cap;
       p += static_cast<std::size_t>(best.den)) {
    const std::size_t m = static_cast<std::size_t>(best.num) * (p / best.den);
    if (m > max_len || runs[p] < m) continue;
    auto starts = detail::period_window_starts(text, p, m);
    WordView least;
    for (std::size_t s : starts) {
      WordView cand = text.substr(s, m);
      if (least.empty() || cand < least) least = cand;
    }
    record.factor = Word(least);
    record.period = p;
    return record;
  }
  throw contract_error("max_exponent: witness reconstruction failed");
}

struct BoundReport {
  bool holds = false;
  ExponentRecord worst;  // the max-exponent witness either way
};

// Every factor of length <= max_len has exponent <= threshold, decided
// exactly. Equivalent to admitting the single maximal exponent.
inline BoundReport check_exponent_bound(WordView text, std::size_t max_len,
                                        const Threshold& threshold) {
  BoundReport rep;
  rep.worst = max_exponent(text, max_len);
  rep.holds = threshold.admits(rep.worst.exponent);
  return rep;
}

inline ExponentRecord max_exponent(const FactorIndex& index, std::size_t max_len) {
  return max_exponent(WordView(index.prefix()), max_len);
}

inline BoundReport check_exponent_bound(const FactorIndex& index, std::size_t max_len,
                                        const Threshold& threshold) {
  return check_exponent_bound(WordView(index.prefix()), max_len, threshold);
}

}  // namespace wordsym
