#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "wordsym/factor_index.hpp"
#include "wordsym/group.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

inline bool is_theta_palindrome(WordView w, const GroupElement& theta) {
  if (!theta.antimorphism()) {
    throw contract_error("is_theta_palindrome: theta must be an antimorphism");
  }
  return FactorIndex::is_theta_fixed(w, theta);
}

inline std::size_t pal_complexity(const FactorIndex& index, const GroupElement& theta,
                                  std::size_t n) {
  return index.theta_palindrome_count(n, theta);
}

// Palindromic tree over alphabets of at most 8 letters. Incremental: one
// push per text position; a position is "rich" when it created a node, i.e.
// its longest palindromic suffix had not occurred before.
class Eertree {
 public:
  Eertree() {
    nodes_.push_back(Node{-1, 0, {}});  // imaginary root, length -1
    nodes_.push_back(Node{0, 0, {}});   // empty-word root
    last_ = 1;
  }

  // Returns true when the extension added a new palindrome.
  bool push(Letter c) {
    if (c >= 8) throw contract_error("eertree: letter out of range");
    text_.push_back(static_cast<char>(c));
    const int pos = static_cast<int>(text_.size()) - 1;
    int cur = last_;
    while (true) {
      int len = nodes_[cur].len;
      int mirror = pos - len - 1;
      if (mirror >= 0 && static_cast<Letter>(text_[mirror]) == c) break;
      cur = nodes_[cur].link;
    }
    if (nodes_[cur].next[c] != 0) {
      last_ = nodes_[cur].next[c];
      return false;
    }
    int link;
    if (nodes_[cur].len + 2 == 1) {
      link = 1;  // single letter: suffix link to the empty root
    } else {
      int probe = nodes_[cur].link;
      while (true) {
        int len = nodes_[probe].len;
        int mirror = pos - len - 1;
        if (mirror >= 0 && static_cast<Letter>(text_[mirror]) == c) break;
        probe = nodes_[probe].link;
      }
      link = nodes_[probe].next[c];
      if (link == 0) link = 1;
    }
    nodes_.push_back(Node{nodes_[cur].len + 2, link, {}});
    nodes_[cur].next[c] = static_cast<int>(nodes_.size()) - 1;
    last_ = static_cast<int>(nodes_.size()) - 1;
    return true;
  }

  // Distinct non-empty palindromic factors seen so far.
  std::size_t distinct_palindromes() const noexcept { return nodes_.size() - 2; }

 private:
  struct Node {
    int len;
    int link;
    std::array<int, 8> next;
  };
  std::vector<Node> nodes_;
  Word text_;
  int last_;
};

// (|w|+1) - number of distinct R-palindromic factors of w counting the empty
// word; zero exactly when w is rich.
inline std::size_t richness_defect(WordView w) {
  Eertree tree;
  for (unsigned char c : w) tree.push(c);
  return (w.size() + 1) - (tree.distinct_palindromes() + 1);
}

// Least prefix length with positive defect, if any: the first position whose
// longest palindromic suffix is not new.
inline std::optional<std::size_t> first_defect_length(WordView w) {
  Eertree tree;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!tree.push(static_cast<unsigned char>(w[i]))) return i + 1;
  }
  return std::nullopt;
}

}  // namespace wordsym
