#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "wordsym/word.hpp"

namespace wordsym {

// A morphism A* -> B* given by one image word per source letter.
class Morphism {
 public:
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
      : source_(source), target_(target), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_.size()) {
      throw spec_error("morphism: one image required per source letter");
    }
    for (const Word& im : images_) {
      target_.require(im, "morphism image");
    }
  }

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }

  const Word& image(Letter c) const {
    if (!source_.contains(c)) throw spec_error("morphism: letter outside source alphabet");
    return images_[c];
  }

  bool non_erasing() const noexcept {
    return std::all_of(images_.begin(), images_.end(),
                       [](const Word& im) { return !im.empty(); });
  }

  std::size_t min_image_length() const noexcept {
    std::size_t m = images_.empty() ? 0 : images_[0].size();
    for (const Word& im : images_) m = std::min(m, im.size());
    return m;
  }

  // sigma(a) = a w with w nonempty, so sigma^n(a) converges to a fixed point.
  bool prolongable_on(Letter a) const {
    const Word& im = image(a);
    return im.size() >= 2 && static_cast<Letter>(im[0]) == a && non_erasing();
  }

  // Some power of the incidence matrix is positive.
  bool primitive() const {
    const int k = source_.size();
    if (source_.size() != target_.size()) return false;
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (int c = 0; c < k; ++c) {
      for (unsigned char d : images_[c]) reach[c][d] = true;
    }
    // iterate reach = reach * base until all-positive or stationary (k^2 steps cap)
    auto all_positive = [&] {
      for (auto& row : reach)
        for (bool b : row)
          if (!b) return false;
      return true;
    };
    for (int step = 0; step < k * k + 1; ++step) {
      if (all_positive()) return true;
      std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
      for (int c = 0; c < k; ++c) {
        for (int m = 0; m < k; ++m) {
          if (!reach[c][m]) continue;
          for (unsigned char d : images_[m]) next[c][d] = true;
        }
      }
      if (next == reach) break;
      reach = std::move(next);
    }
    return all_positive();
  }

  Word apply(WordView w) const {
    std::size_t total = 0;
    for (unsigned char c : w) {
      if (!source_.contains(c)) throw spec_error("apply_morphism: letter outside source alphabet");
      total += images_[c].size();
    }
    Word out;
    out.reserve(total);
    for (unsigned char c : w) out += images_[c];
    return out;
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

// outer(inner(c)) per letter; alphabets must chain.
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(inner.target() == outer.source())) {
    throw spec_error("compose: alphabet mismatch between morphisms");
  }
  std::vector<Word> images;
  images.reserve(inner.source().size());
  for (int c = 0; c < inner.source().size(); ++c) {
    images.push_back(outer.apply(inner.image(static_cast<Letter>(c))));
  }
  return Morphism(inner.source(), outer.target(), std::move(images));
}

inline Morphism identity_morphism(Alphabet a) {
  std::vector<Word> images;
  for (int c = 0; c < a.size(); ++c) images.push_back(Word(1, static_cast<char>(c)));
  return Morphism(a, a, std::move(images));
}

inline Morphism power(const Morphism& m, int n) {
  if (!(m.source() == m.target())) throw spec_error("power: endomorphism required");
  if (n < 0) throw spec_error("power: negative exponent");
  Morphism acc = identity_morphism(m.source());
  for (int i = 0; i < n; ++i) acc = compose(m, acc);
  return acc;
}

// Convenience constructor from display strings, e.g. {"01", "022", "02"}.
inline Morphism make_morphism(int source_size, int target_size,
                              const std::vector<std::string>& image_texts) {
  std::vector<Word> images;
  images.reserve(image_texts.size());
  for (const std::string& t : image_texts) images.push_back(parse_word(t));
  return Morphism(Alphabet(source_size), Alphabet(target_size), std::move(images));
}

}  // namespace wordsym
