#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace tenantmine {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

constexpr std::uint64_t fnv1a64(std::string_view data,
                                std::uint64_t seed = kFnvOffset) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

// FNV-1a over the raw bytes of a file. Throws DataError if unreadable.
std::uint64_t hash_file(const std::filesystem::path& path);

}  // namespace tenantmine
