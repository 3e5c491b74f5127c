#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "wordsym/word.hpp"

namespace wordsym {

// A letter-to-letter morphism or antimorphism: a permutation of the alphabet
// plus a flag. Antimorphisms reverse the word and permute letters. Every
// involutive antimorphism on A* has this shape (reversal composed with an
// involutive permutation), which is the only kind the toolkit deals with.
class GroupElement {
 public:
  GroupElement(std::vector<Letter> permutation, bool antimorphism)
      : perm_(std::move(permutation)), anti_(antimorphism) {
    std::vector<bool> seen(perm_.size(), false);
    for (Letter c : perm_) {
      if (c >= perm_.size() || seen[c]) throw spec_error("group element: not a permutation");
      seen[c] = true;
    }
    if (perm_.empty()) throw spec_error("group element: empty permutation");
  }

  int alphabet_size() const noexcept { return static_cast<int>(perm_.size()); }
  bool antimorphism() const noexcept { return anti_; }
  Letter permute(Letter c) const { return perm_.at(c); }
  const std::vector<Letter>& permutation() const noexcept { return perm_; }

  bool is_identity() const noexcept {
    if (anti_) return false;
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[i] != i) return false;
    return true;
  }

  bool involutive() const noexcept {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[perm_[i]] != i) return false;
    return true;
  }

  Word apply(WordView w) const {
    Word out;
    out.resize(w.size());
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      unsigned char c = w[anti_ ? n - 1 - i : i];
      if (c >= perm_.size()) throw spec_error("apply_element: letter outside alphabet");
      out[i] = static_cast<char>(perm_[c]);
    }
    return out;
  }

  GroupElement inverse() const {
    std::vector<Letter> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<Letter>(i);
    return GroupElement(std::move(inv), anti_);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return a.anti_ == b.anti_ && a.perm_ == b.perm_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) noexcept {
    if (a.anti_ != b.anti_) return !a.anti_;
    return a.perm_ < b.perm_;
  }

 private:
  std::vector<Letter> perm_;
  bool anti_;
};

// first(second(w)): permutations compose, antimorphism flags add mod 2.
inline GroupElement compose(const GroupElement& first, const GroupElement& second) {
  if (first.alphabet_size() != second.alphabet_size()) {
    throw spec_error("compose: group elements over different alphabets");
  }
  std::vector<Letter> perm(first.alphabet_size());
  for (int c = 0; c < first.alphabet_size(); ++c) {
    perm[c] = first.permute(second.permute(static_cast<Letter>(c)));
  }
  return GroupElement(std::move(perm), first.antimorphism() != second.antimorphism());
}

inline GroupElement identity_element(int alphabet_size) {
  std::vector<Letter> perm(alphabet_size);
  for (int c = 0; c < alphabet_size; ++c) perm[c] = static_cast<Letter>(c);
  return GroupElement(std::move(perm), false);
}

inline GroupElement reversal_element(int alphabet_size) {
  std::vector<Letter> perm(alphabet_size);
  for (int c = 0; c < alphabet_size; ++c) perm[c] = static_cast<Letter>(c);
  return GroupElement(std::move(perm), true);
}

// Paper names where they exist; structural fallback otherwise.
inline std::string element_label(const GroupElement& e) {
  const int k = e.alphabet_size();
  bool id = true, swap01 = (k == 2), swap12 = (k == 3);
  for (int c = 0; c < k; ++c) {
    Letter p = e.permute(static_cast<Letter>(c));
    if (p != c) id = false;
    if (k == 2 && p != 1 - c) swap01 = false;
    if (k == 3) {
      Letter want = c == 0 ? 0 : (c == 1 ? 2 : 1);
      if (p != want) swap12 = false;
    }
  }
  if (id) return e.antimorphism() ? "R" : "I";
  if (swap01) return e.antimorphism() ? "E" : "ER";
  if (swap12) return e.antimorphism() ? "S" : "RS";
  std::string perm;
  for (int c = 0; c < k; ++c) perm += display_letter(e.permute(static_cast<Letter>(c)));
  return (e.antimorphism() ? "anti[" : "morph[") + perm + "]";
}

// Finite group generated by letter-to-letter (anti)morphisms. Elements are
// kept sorted for deterministic iteration.
class SymmetryGroup {
 public:
  explicit SymmetryGroup(std::vector<GroupElement> generators)
      : generators_(std::move(generators)) {
    if (generators_.empty()) throw spec_error("generate_group: empty generator set");
    const int k = generators_[0].alphabet_size();
    bool has_anti = false;
    for (const GroupElement& g : generators_) {
      if (g.alphabet_size() != k) throw spec_error("generate_group: mixed alphabets");
      has_anti |= g.antimorphism();
    }
    if (!has_anti) throw spec_error("generate_group: no antimorphism among generators");

    std::set<GroupElement> closure;
    closure.insert(identity_element(k));
    for (const GroupElement& g : generators_) closure.insert(g);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<GroupElement> current(closure.begin(), closure.end());
      for (const GroupElement& a : current) {
        for (const GroupElement& b : current) {
          if (closure.insert(compose(a, b)).second) grew = true;
        }
      }
    }
    elements_.assign(closure.begin(), closure.end());
  }

  int alphabet_size() const noexcept { return elements_[0].alphabet_size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool contains(const GroupElement& e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
  }

  // G^(2): the involutive antimorphisms of G.
  std::vector<GroupElement> involutive_antimorphisms() const {
    std::vector<GroupElement> out;
    for (const GroupElement& e : elements_) {
      if (e.antimorphism() && e.involutive()) out.push_back(e);
    }
    return out;
  }

  std::vector<GroupElement> antimorphisms() const {
    std::vector<GroupElement> out;
    for (const GroupElement& e : elements_) {
      if (e.antimorphism()) out.push_back(e);
    }
    return out;
  }

  bool all_antimorphisms_involutive() const {
    for (const GroupElement& e : elements_) {
      if (e.antimorphism() && !e.involutive()) return false;
    }
    return true;
  }

 private:
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

inline SymmetryGroup generate_group(std::vector<GroupElement> generators) {
  return SymmetryGroup(std::move(generators));
}

// { eta(w) : eta in G }, sorted; front() is the canonical representative.
inline std::vector<Word> orbit(WordView w, const SymmetryGroup& g) {
  std::set<Word> members;
  for (const GroupElement& e : g.elements()) members.insert(e.apply(w));
  return std::vector<Word>(members.begin(), members.end());
}

inline Word orbit_representative(WordView w, const SymmetryGroup& g) {
  Word best(w);
  for (const GroupElement& e : g.elements()) {
    Word img = e.apply(w);
    if (img < best) best = std::move(img);
  }
  return best;
}

}  // namespace wordsym
