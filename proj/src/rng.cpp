#include "monotree/rng.hpp"

namespace monotree {
namespace {

// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Reject the low residue class so that x % bound is exactly uniform.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

std::uint64_t stable_hash(std::span<const std::uint64_t> parts) {
  std::uint64_t h = mix64(parts.size());
  for (std::uint64_t part : parts) h = mix64(h ^ mix64(part));
  return h;
}

std::uint64_t stable_hash(std::initializer_list<std::uint64_t> parts) {
  return stable_hash(std::span<const std::uint64_t>(parts.begin(), parts.size()));
}

}  // namespace monotree
