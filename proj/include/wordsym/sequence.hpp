#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "wordsym/morphism.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

enum class Parity { even, odd };

// Letter-to-word map that depends on the parity of the input position.
// Position 0 of the transducer input is even.
class ParityTransducer {
 public:
  ParityTransducer(Alphabet source, Alphabet target, std::vector<Word> even_images,
                   std::vector<Word> odd_images)
      : source_(source),
        target_(target),
        even_(std::move(even_images)),
        odd_(std::move(odd_images)) {
    if (static_cast<int>(even_.size()) != source_.size() ||
        static_cast<int>(odd_.size()) != source_.size()) {
      throw spec_error("transducer: one image per letter and parity required");
    }
    for (const Word& im : even_) {
      if (im.empty()) throw spec_error("transducer: empty image");
      target_.require(im, "transducer image");
    }
    for (const Word& im : odd_) {
      if (im.empty()) throw spec_error("transducer: empty image");
      target_.require(im, "transducer image");
    }
  }

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(Letter c, Parity p) const {
    if (!source_.contains(c)) throw spec_error("transducer: letter outside source alphabet");
    return (p == Parity::even ? even_ : odd_)[c];
  }

  std::size_t min_image_length() const noexcept {
    std::size_t m = even_[0].size();
    for (const Word& im : even_) m = std::min(m, im.size());
    for (const Word& im : odd_) m = std::min(m, im.size());
    return m;
  }

  Word apply(WordView w, Parity start = Parity::even) const {
    Word out;
    std::size_t i = (start == Parity::even) ? 0 : 1;
    for (unsigned char c : w) {
      out += image(c, (i % 2 == 0) ? Parity::even : Parity::odd);
      ++i;
    }
    return out;
  }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> even_;
  std::vector<Word> odd_;
};

inline Word parity_transduce(const ParityTransducer& t, WordView w,
                             Parity start = Parity::even) {
  return t.apply(w, start);
}

// tau composed with a morphism whose images all have even length; the result
// is an honest morphism (each image keeps the parity of what follows fixed).
inline Morphism compose_transduced(const ParityTransducer& t, const Morphism& m) {
  if (!(m.target() == t.source())) throw spec_error("compose_transduced: alphabet mismatch");
  std::vector<Word> images;
  for (int c = 0; c < m.source().size(); ++c) {
    const Word& im = m.image(static_cast<Letter>(c));
    if (im.size() % 2 != 0) {
      throw spec_error("compose_transduced: image of odd length breaks parity");
    }
    images.push_back(t.apply(im));
  }
  return Morphism(m.source(), t.target(), std::move(images));
}

// Pipeline: fixed point of `base` from `seed`, then `codings` in order, then
// an optional parity transducer.
struct MorphicSpec {
  Morphism base;
  Letter seed;
  std::vector<Morphism> codings;
  std::optional<ParityTransducer> transducer;

  void validate() const {
    if (!base.non_erasing()) throw spec_error("morphic spec: base morphism is erasing");
    if (!base.prolongable_on(seed)) {
      throw spec_error("morphic spec: base morphism not prolongable on seed");
    }
    const Alphabet* cur = &base.target();
    for (const Morphism& m : codings) {
      if (!(m.source() == *cur)) throw spec_error("morphic spec: coding alphabets do not chain");
      if (!m.non_erasing()) throw spec_error("morphic spec: erasing coding");
      cur = &m.target();
    }
    if (transducer && !(transducer->source() == *cur)) {
      throw spec_error("morphic spec: transducer alphabet mismatch");
    }
  }

  const Alphabet& output_alphabet() const {
    if (transducer) return transducer->target();
    if (!codings.empty()) return codings.back().target();
    return base.target();
  }

  // Stable identifier for cache sidecars.
  std::string fingerprint() const {
    std::string s = "base:";
    for (int c = 0; c < base.source().size(); ++c) {
      s += format_word(base.image(static_cast<Letter>(c)));
      s += "|";
    }
    s += ";seed:";
    s += display_letter(seed);
    for (const Morphism& m : codings) {
      s += ";coding:";
      for (int c = 0; c < m.source().size(); ++c) {
        s += format_word(m.image(static_cast<Letter>(c)));
        s += "|";
      }
    }
    if (transducer) {
      s += ";tau:";
      for (int c = 0; c < transducer->source().size(); ++c) {
        s += format_word(transducer->image(static_cast<Letter>(c), Parity::even));
        s += "/";
        s += format_word(transducer->image(static_cast<Letter>(c), Parity::odd));
        s += "|";
      }
    }
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

// First `len` symbols of sigma^omega(seed). Iterates sigma on the seed with
// the previous level memoized by the caller via PrefixBuffer if needed.
inline Word fixed_point_prefix(const Morphism& sigma, Letter seed, std::size_t len) {
  if (!sigma.non_erasing()) throw spec_error("fixed_point_prefix: erasing morphism");
  if (!sigma.prolongable_on(seed)) {
    throw spec_error("fixed_point_prefix: morphism not prolongable on seed");
  }
  if (len == 0) return Word();
  Word w(1, static_cast<char>(seed));
  while (w.size() < len) {
    w = sigma.apply(w);
  }
  w.resize(len);
  return w;
}

// Incrementally extended prefix of a morphic pipeline. Extending never
// rewrites already produced symbols: morphisms and the position-anchored
// transducer both map prefixes to prefixes.
class PrefixBuffer {
 public:
  explicit PrefixBuffer(MorphicSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    base_ = Word(1, static_cast<char>(spec_.seed));
  }

  const MorphicSpec& spec() const noexcept { return spec_; }
  const Word& produced() const noexcept { return produced_; }
  int iterations() const noexcept { return iterations_; }

  const Word& extend_to(std::size_t len) {
    while (produced_.size() < len) {
      base_ = spec_.base.apply(base_);
      ++iterations_;
      Word out = base_;
      for (const Morphism& m : spec_.codings) out = m.apply(out);
      if (spec_.transducer) out = spec_.transducer->apply(out);
      produced_ = std::move(out);
      if (base_.size() > (std::size_t(1) << 31)) {
        throw spec_error("pipeline_prefix: base expansion exceeds hard cap");
      }
    }
    return produced_;
  }

 private:
  MorphicSpec spec_;
  Word base_;
  Word produced_;
  int iterations_ = 0;
};

inline Word pipeline_prefix(const MorphicSpec& spec, std::size_t len) {
  spec.validate();
  if (len == 0) return Word();
  PrefixBuffer buf(spec);
  Word out = buf.extend_to(len);
  out.resize(len);
  return out;
}

struct CommutationReport {
  bool equal = true;
  std::string witness;  // first mismatching letter or position, human readable
};

inline Morphism compose_chain(const std::vector<Morphism>& chain) {
  if (chain.empty()) throw spec_error("compose_chain: empty composition");
  Morphism acc = chain.back();
  for (auto it = std::next(chain.rbegin()); it != chain.rend(); ++it) {
    acc = compose(*it, acc);
  }
  return acc;
}

inline Word apply_chain(const std::vector<Morphism>& chain, WordView w) {
  Word out(w);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out = it->apply(out);
  return out;
}

// Compares lhs = m1 m2 ... and rhs = m1' m2' ... (composition, leftmost
// applied last) on every source letter via composed letter tables, and on
// `probe_prefix` (when given) by applying the lists stepwise -- a second,
// independent route through the same identity.
inline CommutationReport verify_commutation(const std::vector<Morphism>& lhs,
                                            const std::vector<Morphism>& rhs,
                                            const Word& probe_prefix = Word()) {
  Morphism a = compose_chain(lhs);
  Morphism b = compose_chain(rhs);
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw spec_error("verify_commutation: compositions have different alphabets");
  }
  CommutationReport rep;
  for (int c = 0; c < a.source().size(); ++c) {
    if (a.image(static_cast<Letter>(c)) != b.image(static_cast<Letter>(c))) {
      rep.equal = false;
      rep.witness = std::string("letter ") + display_letter(static_cast<Letter>(c)) + ": " +
                    format_word(a.image(static_cast<Letter>(c))) + " vs " +
                    format_word(b.image(static_cast<Letter>(c)));
      return rep;
    }
  }
  if (!probe_prefix.empty()) {
    Word wa = apply_chain(lhs, probe_prefix);
    Word wb = apply_chain(rhs, probe_prefix);
    if (wa != wb) {
      std::size_t i = 0;
      while (i < wa.size() && i < wb.size() && wa[i] == wb[i]) ++i;
      rep.equal = false;
      rep.witness = "prefix images differ first at position " + std::to_string(i);
    }
  }
  return rep;
}

// Raw prefix cache: the letters as one line of display digits, plus a
// sidecar "<path>.meta" with the spec fingerprint and length.
inline void save_prefix(const std::string& path, const MorphicSpec& spec, WordView prefix) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw spec_error("save_prefix: cannot open " + path);
  if (!prefix.empty()) out << format_word(prefix) << "\n";
  std::ofstream meta(path + ".meta", std::ios::binary);
  meta << "spec " << spec.fingerprint() << "\n"
       << "length " << prefix.size() << "\n";
}

inline std::optional<Word> load_prefix(const std::string& path, const MorphicSpec& spec,
                                       std::size_t min_len) {
  std::ifstream meta(path + ".meta", std::ios::binary);
  if (!meta) return std::nullopt;
  std::string key, fp;
  std::size_t len = 0;
  meta >> key >> fp;
  meta >> key >> len;
  if (fp != spec.fingerprint() || len < min_len) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  if (line.size() < min_len) return std::nullopt;
  return parse_word(line);
}

}  // namespace wordsym
