#include "qutest/sim/rng.hpp"

namespace qutest::sim {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::string_view> parts) {
  std::uint64_t h = splitmix64(master);
  for (std::string_view part : parts) {
    std::uint64_t fnv = 0xCBF29CE484222325ULL;
    for (unsigned char c : part) {
      fnv ^= c;
      fnv *= 0x100000001B3ULL;
    }
    h = splitmix64(h ^ fnv);
  }
  // Keep seeds within 63 bits so they print and parse as plain integers everywhere.
  return h >> 1;
}

std::uint64_t random_master_seed() {
  std::random_device rd;
  const std::uint64_t hi = rd();
  const std::uint64_t lo = rd();
  return ((hi << 32) ^ lo) % 1000000000ULL;
}

}  // namespace qutest::sim
