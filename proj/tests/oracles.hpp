#pragma once

// Brute-force reference implementations used only by tests. Everything here
// is written the slow, obvious way and stays independent of the library
// code paths it checks.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wordsym/group.hpp"
#include "wordsym/word.hpp"

namespace oracle {

using wordsym::Letter;
using wordsym::Word;
using wordsym::WordView;

inline std::set<Word> factors(WordView w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(Word(w.substr(i, n)));
  return out;
}

inline std::size_t complexity(WordView w, std::size_t n) { return factors(w, n).size(); }

inline std::set<Word> special_factors(WordView w, std::size_t n, bool left, bool right) {
  std::set<Word> out;
  for (const Word& f : factors(w, n)) {
    std::set<char> lefts, rights;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      if (WordView(w.substr(i, n)) != WordView(f)) continue;
      if (i > 0) lefts.insert(w[i - 1]);
      if (i + n < w.size()) rights.insert(w[i + n]);
    }
    if ((left && lefts.size() >= 2) || (right && rights.size() >= 2)) out.insert(f);
  }
  return out;
}

inline std::size_t smallest_period(WordView w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < w.size(); ++i) {
      if (w[i] != w[i + p]) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  return w.size();
}

inline bool is_palindrome(WordView w) {
  for (std::size_t i = 0; i < w.size() / 2; ++i) {
    if (w[i] != w[w.size() - 1 - i]) return false;
  }
  return true;
}

inline std::size_t distinct_palindromes(WordView w) {
  std::set<Word> pals;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      WordView v = w.substr(i, len);
      if (is_palindrome(v)) pals.insert(Word(v));
    }
  }
  return pals.size();
}

inline std::size_t richness_defect(WordView w) {
  return (w.size() + 1) - (distinct_palindromes(w) + 1);
}

struct MaxExponent {
  Word factor;
  std::size_t period = 1;
  long long num = 1;
  long long den = 1;
};

// Scan every substring; keep the spec's tie-break (shortest, then lex).
inline MaxExponent max_exponent(WordView w, std::size_t max_len) {
  MaxExponent best;
  best.factor = Word(1, *std::min_element(w.begin(), w.end()));
  for (std::size_t len = 1; len <= std::min(max_len, w.size()); ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      WordView f = w.substr(i, len);
      std::size_t p = smallest_period(f);
      // compare len/p with best (cross multiplication)
      long long l = static_cast<long long>(len) * best.den;
      long long r = best.num * static_cast<long long>(p);
      bool better = l > r;
      bool tie = l == r;
      if (better || (tie && (f.size() < best.factor.size() ||
                             (f.size() == best.factor.size() && Word(f) < best.factor)))) {
        best.factor = Word(f);
        best.period = p;
        best.num = static_cast<long long>(len);
        best.den = static_cast<long long>(p);
      }
    }
  }
  return best;
}

// Orbit by breadth-first generator application, independent of the group
// closure the library computes.
inline std::set<Word> orbit(WordView w,
                            const std::vector<wordsym::GroupElement>& generators) {
  std::set<Word> out{Word(w)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Word> current(out.begin(), out.end());
    for (const Word& m : current) {
      for (const auto& g : generators) {
        if (out.insert(g.apply(m)).second) grew = true;
      }
    }
  }
  return out;
}

inline Word random_word(std::mt19937& rng, std::size_t max_len, int alphabet) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, alphabet - 1);
  Word w;
  const std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>(letter_dist(rng)));
  return w;
}

}  // namespace oracle
