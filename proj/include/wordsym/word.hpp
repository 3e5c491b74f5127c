#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wordsym {

// A letter is a small non-negative integer. Words store letters as raw byte
// values (not ASCII), so lexicographic byte order coincides with the
// alphabet order and std::string gives us substrings, views and hashing for
// free. Use parse_word/format_word at I/O boundaries.
using Letter = unsigned char;
using Word = std::string;
using WordView = std::string_view;

class spec_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Ordered alphabet {0, 1, ..., size-1}; display names are the digits
// "0","1",... (letters beyond 9 render as 'a','b',...).
class Alphabet {
 public:
  explicit Alphabet(int size) : size_(size) {
    if (size < 1 || size > 36) {
      throw spec_error("alphabet size must be in [1, 36]");
    }
  }

  int size() const noexcept { return size_; }

  bool contains(Letter c) const noexcept { return c < size_; }

  bool contains(WordView w) const noexcept {
    for (unsigned char c : w) {
      if (c >= size_) return false;
    }
    return true;
  }

  void require(WordView w, const char* what) const {
    if (!contains(w)) {
      throw spec_error(std::string(what) + ": letter outside alphabet");
    }
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.size_ == b.size_;
  }

 private:
  int size_;
};

inline char display_letter(Letter c) {
  return c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + c - 10);
}

inline Letter read_letter(char c) {
  if (c >= '0' && c <= '9') return static_cast<Letter>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(c - 'a' + 10);
  throw spec_error(std::string("invalid letter character '") + c + "'");
}

// "0102" -> word of byte letters {0,1,0,2}
inline Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(static_cast<char>(read_letter(c)));
  return w;
}

inline std::string format_word(WordView w) {
  std::string out;
  out.reserve(w.size());
  for (unsigned char c : w) out.push_back(display_letter(c));
  return out;
}

inline Word reversed(WordView w) { return Word(w.rbegin(), w.rend()); }

}  // namespace wordsym
