#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wordsym/catalog.hpp"
#include "wordsym/group.hpp"
#include "wordsym/sequence.hpp"

namespace wordsym {

// Sequence definition file: a small line-based format.
//
//   alphabet 3          base alphabet size
//   seed 0              fixed-point seed letter
//   [base]              letter: image lines for the base endomorphism
//   0: 01
//   1: 022
//   2: 02
//   [coding]            optional, repeatable, applied in order;
//   alphabet 2          ... optional target-size pin (default: inferred)
//   0: 0
//   [transducer.even]   optional; both parities or neither
//   [transducer.odd]
//   [group]             optional; R, E, S, I or "anti 021" / "morph 120"
//
// '#' starts a comment. Letters are display digits.
struct SequenceConfig {
  MorphicSpec spec;
  std::optional<SymmetryGroup> group;
};

namespace detail {

struct RawSection {
  std::string name;
  std::vector<std::pair<Letter, Word>> images;
  std::vector<std::string> plain_lines;
  int pinned_alphabet = 0;
};

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline int inferred_target(const RawSection& s) {
  if (s.pinned_alphabet > 0) return s.pinned_alphabet;
  int max_letter = 0;
  for (const auto& [c, im] : s.images) {
    for (unsigned char d : im) max_letter = std::max(max_letter, static_cast<int>(d));
  }
  return max_letter + 1;
}

inline std::vector<Word> section_images(const RawSection& s, int source_size, int target_size) {
  std::vector<Word> images(source_size);
  std::vector<bool> seen(source_size, false);
  for (const auto& [c, im] : s.images) {
    if (c >= source_size) {
      throw spec_error("config [" + s.name + "]: letter " + std::string(1, display_letter(c)) +
                       " outside the source alphabet");
    }
    if (seen[c]) throw spec_error("config [" + s.name + "]: duplicate image for a letter");
    seen[c] = true;
    Alphabet(target_size).require(im, ("config [" + s.name + "] image").c_str());
    images[c] = im;
  }
  for (int c = 0; c < source_size; ++c) {
    if (!seen[c]) {
      throw spec_error("config [" + s.name + "]: missing image for letter " +
                       std::string(1, display_letter(static_cast<Letter>(c))));
    }
  }
  return images;
}

inline GroupElement parse_group_line(const std::string& line, int alphabet_size) {
  std::istringstream in(line);
  std::string kind;
  in >> kind;
  if (kind == "I") return identity_element(alphabet_size);
  if (kind == "R") return reversal_element(alphabet_size);
  if (kind == "E") {
    if (alphabet_size != 2) throw spec_error("config [group]: E needs a binary alphabet");
    return catalog::E();
  }
  if (kind == "S") {
    if (alphabet_size != 3) throw spec_error("config [group]: S needs a ternary alphabet");
    return catalog::S();
  }
  if (kind == "anti" || kind == "morph") {
    std::string digits;
    in >> digits;
    if (static_cast<int>(digits.size()) != alphabet_size) {
      throw spec_error("config [group]: permutation must list every letter image");
    }
    std::vector<Letter> perm;
    for (char c : digits) perm.push_back(read_letter(c));
    return GroupElement(std::move(perm), kind == "anti");
  }
  throw spec_error("config [group]: unknown element '" + line + "'");
}

}  // namespace detail

inline SequenceConfig parse_sequence_config(std::istream& in) {
  int alphabet = 0;
  int seed = -1;
  std::vector<detail::RawSection> sections;
  detail::RawSection* current = nullptr;

  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = detail::strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw spec_error("config: malformed section header " + line);
      sections.push_back(detail::RawSection{line.substr(1, line.size() - 2), {}, {}, 0});
      current = &sections.back();
      continue;
    }
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "alphabet") {
      int k = 0;
      ls >> k;
      if (k < 1) throw spec_error("config: bad alphabet size");
      if (current == nullptr) {
        alphabet = k;
      } else {
        current->pinned_alphabet = k;
      }
      continue;
    }
    if (head == "seed" && current == nullptr) {
      std::string s;
      ls >> s;
      if (s.size() != 1) throw spec_error("config: seed must be a single letter");
      seed = read_letter(s[0]);
      continue;
    }
    if (current == nullptr) throw spec_error("config: unexpected line outside a section: " + line);
    auto colon = line.find(':');
    if (colon != std::string::npos && colon == 1 && current->name != "group") {
      Letter c = read_letter(line[0]);
      Word im = parse_word(detail::strip(line.substr(colon + 1)));
      current->images.emplace_back(c, im);
    } else {
      current->plain_lines.push_back(line);
    }
  }

  if (alphabet <= 0) throw spec_error("config: missing 'alphabet' line");
  if (seed < 0) throw spec_error("config: missing 'seed' line");

  const detail::RawSection* base = nullptr;
  std::vector<const detail::RawSection*> codings;
  const detail::RawSection *t_even = nullptr, *t_odd = nullptr, *group_sec = nullptr;
  for (const auto& s : sections) {
    if (s.name == "base") {
      if (base) throw spec_error("config: duplicate [base]");
      base = &s;
    } else if (s.name == "coding") {
      codings.push_back(&s);
    } else if (s.name == "transducer.even") {
      t_even = &s;
    } else if (s.name == "transducer.odd") {
      t_odd = &s;
    } else if (s.name == "group") {
      group_sec = &s;
    } else {
      throw spec_error("config: unknown section [" + s.name + "]");
    }
  }
  if (base == nullptr) throw spec_error("config: missing [base] section");
  if ((t_even == nullptr) != (t_odd == nullptr)) {
    throw spec_error("config: transducer needs both parities");
  }
  for (const auto& s : sections) {
    if (s.name != "group" && !s.plain_lines.empty()) {
      throw spec_error("config [" + s.name + "]: unrecognized line '" + s.plain_lines.front() +
                       "'");
    }
  }

  SequenceConfig out{
      MorphicSpec{Morphism(Alphabet(alphabet), Alphabet(alphabet),
                           detail::section_images(*base, alphabet, alphabet)),
                  static_cast<Letter>(seed),
                  {},
                  {}},
      {}};

  int stage_alphabet = alphabet;
  for (const detail::RawSection* s : codings) {
    int target = detail::inferred_target(*s);
    out.spec.codings.push_back(Morphism(Alphabet(stage_alphabet), Alphabet(target),
                                        detail::section_images(*s, stage_alphabet, target)));
    stage_alphabet = target;
  }
  if (t_even != nullptr) {
    int target = std::max(detail::inferred_target(*t_even), detail::inferred_target(*t_odd));
    if (t_even->pinned_alphabet > 0) target = t_even->pinned_alphabet;
    out.spec.transducer = ParityTransducer(
        Alphabet(stage_alphabet), Alphabet(target),
        detail::section_images(*t_even, stage_alphabet, target),
        detail::section_images(*t_odd, stage_alphabet, target));
    stage_alphabet = target;
  }
  out.spec.validate();

  if (group_sec != nullptr) {
    std::vector<GroupElement> generators;
    for (const std::string& line : group_sec->plain_lines) {
      generators.push_back(detail::parse_group_line(line, stage_alphabet));
    }
    out.group = generate_group(std::move(generators));
  }
  return out;
}

inline SequenceConfig load_sequence_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("config: cannot open " + path);
  return parse_sequence_config(in);
}

}  // namespace wordsym
