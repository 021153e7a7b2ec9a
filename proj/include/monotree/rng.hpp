#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace monotree {

// The engine's output sequence is fixed by the standard, so seeded runs are
// reproducible on every platform. The draws below are implemented here because
// the <random> distributions are implementation-defined.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound); bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform integer in [lo, hi]; requires lo <= hi.
inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo,
                                     std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

inline bool coin_flip(Rng& rng) { return (rng() >> 63) != 0; }

template <class T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

// k distinct elements of `pool` in random order (partial Fisher-Yates).
template <class T>
std::vector<T> sample_without_replacement(std::span<const T> pool,
                                          std::size_t k, Rng& rng) {
  std::vector<T> items(pool.begin(), pool.end());
  if (k > items.size()) k = items.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(items[i], items[i + uniform_below(rng, items.size() - i)]);
  }
  items.resize(k);
  return items;
}

// Order-sensitive 64-bit mix of a tuple of integers. Only integer arithmetic
// on uint64_t is involved, so the value does not depend on endianness or
// platform. Doubles should be passed through std::bit_cast<std::uint64_t>.
std::uint64_t stable_hash(std::initializer_list<std::uint64_t> parts);
std::uint64_t stable_hash(std::span<const std::uint64_t> parts);

}  // namespace monotree
