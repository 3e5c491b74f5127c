#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wordsym/factor_index.hpp"
#include "wordsym/sequence.hpp"

namespace wordsym {

// Finite-prefix epistemology: every factor-derived quantity is a lower bound
// until the doubling protocol has seen it unchanged twice. Reports carry the
// flag; nothing is silently trusted.
struct ComplexityTable {
  std::size_t n_max = 0;
  std::vector<std::size_t> values;  // C(0..n_max)
  std::vector<bool> stable;         // per n: unchanged across the last doubling
  bool stabilized = false;          // whole-table verdict from the protocol
  std::size_t prefix_length = 0;
  int doublings = 0;
};

struct PalComplexityTable {
  GroupElement theta;
  std::vector<std::size_t> values;  // P_theta(0..n_max)
  bool stabilized = false;
};

struct StabilizeOptions {
  std::size_t initial_length = 0;  // 0: pick from n_max
  std::size_t max_prefix_length = std::size_t(1) << 20;
  double max_seconds = 0;  // 0: unlimited
  int required_stable_doublings = 2;
};

struct StabilizationResult {
  FactorIndex index;
  ComplexityTable table;
  bool stabilized = false;
};

namespace detail {

inline std::uint64_t fnv64(std::uint64_t h, WordView w) {
  for (unsigned char c : w) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= 0xfe;
  h *= 1099511628211ull;
  return h;
}

// Digest of everything the protocol watches: C(n) and both special-factor
// sets for every n <= n_max.
inline std::vector<std::uint64_t> stabilization_digest(const FactorIndex& index) {
  std::vector<std::uint64_t> digest;
  digest.reserve(index.n_max() + 1);
  for (std::size_t n = 0; n <= index.n_max(); ++n) {
    std::uint64_t h = 1469598103934665603ull ^ (index.complexity(n) * 0x9e3779b97f4a7c15ull);
    for (const Word& w : index.special_factors(n, FactorIndex::Side::left)) h = fnv64(h, w);
    h ^= 0xabcdef;
    for (const Word& w : index.special_factors(n, FactorIndex::Side::right)) h = fnv64(h, w);
    digest.push_back(h);
  }
  return digest;
}

}  // namespace detail

inline StabilizationResult stabilize(const MorphicSpec& spec, std::size_t n_max,
                                     StabilizeOptions opts = {}) {
  spec.validate();
  const int alphabet = spec.output_alphabet().size();
  std::size_t len = opts.initial_length;
  if (len == 0) len = std::max<std::size_t>(4096, 8 * (n_max + 1));
  if (len > opts.max_prefix_length) len = opts.max_prefix_length;

  const auto started = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (opts.max_seconds <= 0) return false;
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - started;
    return d.count() > opts.max_seconds;
  };

  PrefixBuffer buffer(spec);
  std::optional<FactorIndex> index;
  std::vector<std::uint64_t> prev_digest;
  std::vector<bool> stable(n_max + 1, false);
  int stable_steps = 0;
  int doublings = 0;
  bool stabilized = false;

  for (;;) {
    Word prefix = buffer.extend_to(len);
    prefix.resize(len);
    index.emplace(std::move(prefix), n_max, alphabet);
    auto digest = detail::stabilization_digest(*index);
    if (!prev_digest.empty()) {
      ++doublings;
      bool all_same = digest == prev_digest;
      for (std::size_t n = 0; n <= n_max; ++n) stable[n] = digest[n] == prev_digest[n];
      stable_steps = all_same ? stable_steps + 1 : 0;
      if (stable_steps >= opts.required_stable_doublings) {
        stabilized = true;
        break;
      }
    }
    prev_digest = std::move(digest);
    if (len >= opts.max_prefix_length || out_of_time()) break;  // cap: report unstabilized
    len = std::min(len * 2, opts.max_prefix_length);
  }

  ComplexityTable table;
  table.n_max = n_max;
  table.values.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) table.values[n] = index->complexity(n);
  table.stable = std::move(stable);
  table.stabilized = stabilized;
  table.prefix_length = index->prefix().size();
  table.doublings = doublings;
  return StabilizationResult{std::move(*index), std::move(table), stabilized};
}

inline PalComplexityTable pal_complexity_table(const FactorIndex& index,
                                               const GroupElement& theta, std::size_t n_max,
                                               bool index_stabilized) {
  if (n_max > index.n_max()) throw contract_error("pal table: n_max beyond index");
  PalComplexityTable table{theta, {}, index_stabilized};
  table.values.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    table.values[n] = index.theta_palindrome_count(n, theta);
  }
  return table;
}

}  // namespace wordsym
