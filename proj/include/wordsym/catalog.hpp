#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "wordsym/algebraic.hpp"
#include "wordsym/factor_index.hpp"
#include "wordsym/group.hpp"
#include "wordsym/morphism.hpp"
#include "wordsym/sequence.hpp"

namespace wordsym::catalog {

// Ternary machinery behind the sequence z.
inline Morphism f() { return make_morphism(3, 3, {"01", "022", "02"}); }
inline Morphism g() { return make_morphism(3, 3, {"20", "21", "2"}); }

inline Morphism phi() { return make_morphism(5, 5, {"01", "02", "03", "04", "044"}); }
inline Morphism psi() { return make_morphism(5, 3, {"0", "1", "22", "202", "20102"}); }

inline const char* word_A() { return "00101101"; }
inline const char* word_B() { return "001"; }
inline const char* word_C() { return "00202202"; }
inline const char* word_D() { return "002"; }

inline Morphism xi() {
  const std::string A = word_A(), B = word_B(), C = word_C(), D = word_D();
  return make_morphism(5, 3, {A, A + D, A + C, A + C + C, A + C + C + B + C + C});
}

inline ParityTransducer tau() {
  const std::string A = word_A(), B = word_B(), C = word_C(), D = word_D();
  return ParityTransducer(Alphabet(3), Alphabet(3),
                          {parse_word(B), parse_word(A), parse_word(A + A)},
                          {parse_word(D), parse_word(C), parse_word(C + C)});
}

// Binary machinery behind the Rote sequences. The ternary h here is not the
// same morphism as f above (their images of 1 and 2 are swapped).
inline Morphism f_bin() { return make_morphism(3, 2, {"0", "01", "011"}); }
inline Morphism g_bin() { return make_morphism(3, 3, {"011", "0121", "012121"}); }
inline Morphism h() { return make_morphism(3, 3, {"01", "02", "022"}); }

inline Morphism thue_morse() { return make_morphism(2, 2, {"01", "10"}); }

inline GroupElement identity(int alphabet_size) { return identity_element(alphabet_size); }
inline GroupElement reversal(int alphabet_size) { return reversal_element(alphabet_size); }

// S: antimorphism on {0,1,2} fixing 0 and exchanging 1 and 2.
inline GroupElement S() { return GroupElement({0, 2, 1}, true); }
// E: antimorphism on {0,1} exchanging the letters.
inline GroupElement E() { return GroupElement({1, 0}, true); }

inline SymmetryGroup group_classical(int alphabet_size) {
  return generate_group({reversal(alphabet_size)});
}
inline SymmetryGroup group_ternary() { return generate_group({reversal(3), S()}); }
inline SymmetryGroup group_binary() { return generate_group({reversal(2), E()}); }

inline SymmetryGroup group_by_name(const std::string& name, int alphabet_size) {
  if (name == "classical" || name == "IR") return group_classical(alphabet_size);
  if (name == "ternary" || name == "IRS") return group_ternary();
  if (name == "binary" || name == "IRE") return group_binary();
  throw spec_error("unknown group: " + name +
                   " (expected classical, ternary, binary, or a config file)");
}

// Pipelines for the named sequences of the paper.
inline MorphicSpec sequence(const std::string& name) {
  if (name == "x") return MorphicSpec{f(), 0, {}, {}};
  if (name == "y") return MorphicSpec{f(), 0, {g()}, {}};
  if (name == "z") return MorphicSpec{f(), 0, {g()}, tau()};
  if (name == "z_xi") return MorphicSpec{phi(), 0, {xi()}, {}};
  if (name == "u") return MorphicSpec{phi(), 0, {}, {}};
  if (name == "rote1") return MorphicSpec{h(), 0, {f_bin()}, {}};
  if (name == "rote2") return MorphicSpec{h(), 0, {g_bin(), f_bin()}, {}};
  if (name == "tm" || name == "t") return MorphicSpec{thue_morse(), 0, {}, {}};
  throw spec_error("unknown catalog sequence: " + name);
}

inline std::vector<std::string> sequence_names() {
  return {"x", "y", "z", "z_xi", "u", "rote1", "rote2", "tm"};
}

// Default symmetry group a catalog sequence is studied under.
inline SymmetryGroup default_group(const std::string& name) {
  if (name == "z" || name == "z_xi" || name == "x" || name == "y") return group_ternary();
  if (name == "rote1" || name == "rote2" || name == "tm" || name == "t") return group_binary();
  if (name == "u") return group_classical(5);
  throw spec_error("unknown catalog sequence: " + name);
}

// x_k = xi(phi^k(2)) 00: the S-palindrome family feeding P_S(2n) >= 2.
// Throws if the constructed word is not an even-length S-palindrome, or when
// a z-prefix is supplied and the word is not a factor of it.
inline Word s_palindrome_family(int k, const Word* z_prefix = nullptr) {
  if (k < 0) throw contract_error("s_palindrome_family: negative iteration count");
  Word w(1, static_cast<char>(2));
  const Morphism p = phi();
  for (int i = 0; i < k; ++i) w = p.apply(w);
  Word result = xi().apply(w);
  result.push_back(0);
  result.push_back(0);
  if (result.size() % 2 != 0 || !FactorIndex::is_theta_fixed(result, S())) {
    throw contract_error("s_palindrome_family: x_k failed the S-palindrome check");
  }
  if (z_prefix != nullptr) {
    auto it = std::search(z_prefix->begin(), z_prefix->end(),
                          std::boyer_moore_searcher(result.begin(), result.end()));
    if (it == z_prefix->end()) {
      throw contract_error("s_palindrome_family: x_" + std::to_string(k) +
                           " not found in the supplied prefix");
    }
  }
  return result;
}

}  // namespace wordsym::catalog
