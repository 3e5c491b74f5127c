#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <unordered_map>
#include <vector>

#include "wordsym/group.hpp"
#include "wordsym/word.hpp"

namespace wordsym {

// All distinct factors of a prefix, per length up to n_max, with capped
// occurrence lists and one-letter extension sets. Distinct factors are
// bucketed by a rolling hash of their content; equality is always confirmed
// against the stored first occurrence, so hash collisions cost time, never
// correctness.
class FactorIndex {
 public:
  static constexpr int kMaxOccurrences = 16;

  struct Entry {
    std::uint32_t first_pos = 0;
    std::uint32_t total_count = 0;
    std::uint8_t left_mask = 0;   // bit c set: letter c seen immediately left
    std::uint8_t right_mask = 0;  // bit c set: letter c seen immediately right
    std::array<std::uint32_t, kMaxOccurrences> occurrences{};
    std::uint8_t occ_count = 0;
  };

  FactorIndex(Word prefix, std::size_t n_max, int alphabet_size)
      : prefix_(std::move(prefix)), n_max_(n_max), alphabet_(alphabet_size) {
    if (n_max_ > prefix_.size()) throw contract_error("build_index: n_max exceeds prefix length");
    if (alphabet_size < 1 || alphabet_size > 8) {
      throw contract_error("build_index: extension masks support up to 8 letters");
    }
    lengths_.resize(n_max_ + 1);
    for (std::size_t n = 1; n <= n_max_; ++n) index_length(n);
  }

  const Word& prefix() const noexcept { return prefix_; }
  std::size_t n_max() const noexcept { return n_max_; }
  int alphabet_size() const noexcept { return alphabet_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  // C(n) as witnessed by the prefix: a lower bound for the sequence itself.
  std::size_t complexity(std::size_t n) const {
    check_range(n);
    if (n == 0) return 1;  // the empty factor
    return lengths_[n].entries.size();
  }

  WordView factor_view(std::size_t n, std::size_t entry_idx) const {
    const Entry& e = lengths_[n].entries[entry_idx];
    return WordView(prefix_).substr(e.first_pos, n);
  }

  std::size_t entry_count(std::size_t n) const {
    check_range(n);
    return n == 0 ? 1 : lengths_[n].entries.size();
  }

  const Entry& entry(std::size_t n, std::size_t idx) const { return lengths_[n].entries[idx]; }

  bool contains(WordView w) const {
    if (w.empty()) return true;
    if (w.size() > n_max_) throw contract_error("contains: query longer than n_max");
    return find_entry(w) >= 0;
  }

  // Occurrence positions of w in the prefix (first kMaxOccurrences).
  std::vector<std::size_t> occurrences(WordView w) const {
    std::vector<std::size_t> out;
    long idx = find_entry(w);
    if (idx < 0) return out;
    const Entry& e = lengths_[w.size()].entries[static_cast<std::size_t>(idx)];
    for (int i = 0; i < e.occ_count; ++i) out.push_back(e.occurrences[i]);
    return out;
  }

  enum class Side { left, right, either };

  bool is_special(std::size_t n, std::size_t entry_idx, Side side) const {
    const Entry& e = lengths_[n].entries[entry_idx];
    bool l = popcount8(e.left_mask) >= 2;
    bool r = popcount8(e.right_mask) >= 2;
    switch (side) {
      case Side::left:
        return l;
      case Side::right:
        return r;
      case Side::either:
        return l || r;
    }
    return false;
  }

  std::vector<Word> special_factors(std::size_t n, Side side) const {
    check_range(n);
    std::vector<Word> out;
    if (n == 0) {
      // epsilon is special iff at least two letters occur
      if (complexity(1) >= 2) out.push_back(Word());
      return out;
    }
    for (std::size_t i = 0; i < lengths_[n].entries.size(); ++i) {
      if (is_special(n, i, side)) out.emplace_back(factor_view(n, i));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int right_extension_count(std::size_t n, std::size_t entry_idx) const {
    return popcount8(lengths_[n].entries[entry_idx].right_mask);
  }
  int left_extension_count(std::size_t n, std::size_t entry_idx) const {
    return popcount8(lengths_[n].entries[entry_idx].left_mask);
  }

  // Count of length-n factors fixed by the antimorphism theta.
  std::size_t theta_palindrome_count(std::size_t n, const GroupElement& theta) const {
    check_range(n);
    if (!theta.antimorphism()) throw contract_error("pal_complexity: theta must be an antimorphism");
    if (n == 0) return 1;
    std::size_t count = 0;
    for (std::size_t i = 0; i < lengths_[n].entries.size(); ++i) {
      WordView w = factor_view(n, i);
      if (is_theta_fixed(w, theta)) ++count;
    }
    return count;
  }

  // Checks every position so that non-involutive permutations are handled too.
  static bool is_theta_fixed(WordView w, const GroupElement& theta) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<unsigned char>(w[i]) !=
          theta.permute(static_cast<unsigned char>(w[n - 1 - i]))) {
        return false;
      }
    }
    return true;
  }

  // Positions (ascending) where a left-or-right special factor of length n
  // starts. Scans the whole prefix, not the capped occurrence lists.
  std::vector<std::size_t> special_positions(std::size_t n) const {
    check_range(n);
    std::vector<std::size_t> out;
    if (n == 0 || prefix_.size() < n) return out;
    std::vector<bool> special(lengths_[n].entries.size());
    bool any = false;
    for (std::size_t i = 0; i < special.size(); ++i) {
      special[i] = is_special(n, i, Side::either);
      any |= special[i];
    }
    if (!any) return out;
    RollingHash rh(n);
    std::uint64_t h = rh.full(prefix_.data(), n);
    for (std::size_t i = 0;; ++i) {
      long idx = find_entry_hashed(WordView(prefix_).substr(i, n), h);
      if (idx >= 0 && special[static_cast<std::size_t>(idx)]) out.push_back(i);
      if (i + n >= prefix_.size()) break;
      h = rh.roll(h, prefix_[i], prefix_[i + n]);
    }
    return out;
  }

 private:
  struct RollingHash {
    static constexpr std::uint64_t kBase = 0x100000001b3ull;
    std::uint64_t top_power;  // kBase^(n-1)
    explicit RollingHash(std::size_t n) : top_power(1) {
      for (std::size_t i = 1; i < n; ++i) top_power *= kBase;
    }
    std::uint64_t full(const char* data, std::size_t n) const {
      std::uint64_t h = 0;
      for (std::size_t i = 0; i < n; ++i) h = h * kBase + static_cast<unsigned char>(data[i]) + 1;
      return h;
    }
    std::uint64_t roll(std::uint64_t h, char out_c, char in_c) const {
      h -= (static_cast<unsigned char>(out_c) + 1) * top_power;
      return h * kBase + static_cast<unsigned char>(in_c) + 1;
    }
  };

  struct LengthTable {
    std::vector<Entry> entries;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  };

  void check_range(std::size_t n) const {
    if (n > n_max_) throw contract_error("factor index: length out of range");
  }

  static int popcount8(std::uint8_t m) { return __builtin_popcount(m); }

  void index_length(std::size_t n) {
    LengthTable& table = lengths_[n];
    if (prefix_.size() < n) return;
    const std::size_t windows = prefix_.size() - n + 1;
    table.buckets.reserve(64);
    RollingHash rh(n);
    std::uint64_t h = rh.full(prefix_.data(), n);
    for (std::size_t i = 0;; ++i) {
      insert_occurrence(table, n, i, h);
      if (i + 1 >= windows) break;
      h = rh.roll(h, prefix_[i], prefix_[i + n]);
    }
  }

  void insert_occurrence(LengthTable& table, std::size_t n, std::size_t pos, std::uint64_t h) {
    auto& bucket = table.buckets[h];
    Entry* entry = nullptr;
    for (std::uint32_t idx : bucket) {
      Entry& e = table.entries[idx];
      if (std::memcmp(prefix_.data() + e.first_pos, prefix_.data() + pos, n) == 0) {
        entry = &e;
        break;
      }
    }
    if (entry == nullptr) {
      bucket.push_back(static_cast<std::uint32_t>(table.entries.size()));
      table.entries.emplace_back();
      entry = &table.entries.back();
      entry->first_pos = static_cast<std::uint32_t>(pos);
    }
    entry->total_count += 1;
    if (entry->occ_count < kMaxOccurrences) {
      entry->occurrences[entry->occ_count++] = static_cast<std::uint32_t>(pos);
    }
    if (pos > 0) entry->left_mask |= std::uint8_t(1) << static_cast<unsigned char>(prefix_[pos - 1]);
    if (pos + n < prefix_.size()) {
      entry->right_mask |= std::uint8_t(1) << static_cast<unsigned char>(prefix_[pos + n]);
    }
  }

  long find_entry(WordView w) const {
    RollingHash rh(w.size());
    return find_entry_hashed(w, rh.full(w.data(), w.size()));
  }

  long find_entry_hashed(WordView w, std::uint64_t h) const {
    const LengthTable& table = lengths_[w.size()];
    auto it = table.buckets.find(h);
    if (it == table.buckets.end()) return -1;
    for (std::uint32_t idx : it->second) {
      const Entry& e = table.entries[idx];
      if (std::memcmp(prefix_.data() + e.first_pos, w.data(), w.size()) == 0) {
        return static_cast<long>(idx);
      }
    }
    return -1;
  }

  Word prefix_;
  std::size_t n_max_;
  Alphabet alphabet_;
  std::vector<LengthTable> lengths_;
};

inline FactorIndex build_index(Word prefix, std::size_t n_max, int alphabet_size) {
  return FactorIndex(std::move(prefix), n_max, alphabet_size);
}

}  // namespace wordsym
