#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "tenantmine/hash.hpp"

namespace tenantmine {

// SplitMix64 (Steele, Lea, Flood 2014), used to expand seeds.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

// xoshiro256** (Blackman & Vigna 2018). A fixed, documented generator so
// sampled streams are reproducible across compilers and standard libraries;
// std:: distributions are deliberately not used anywhere.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& word : s_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n) via rejection of the biased tail.
  std::uint32_t next_below(std::uint32_t n) {
    const std::uint64_t span = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return static_cast<std::uint32_t>(x % span);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_;
};

// Derives an independent stream seed from a base seed and a string key
// (e.g. a document id), keeping per-document streams stable under
// reordering of the inputs.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view key) {
  SplitMix64 sm{seed ^ fnv1a64(key)};
  return sm.next();
}

}  // namespace tenantmine
