#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace qutest::sim {

// Seeded generator used for all sampling: a 64-bit Mersenne Twister, whose
// output sequence is fixed by the C++ standard, with the uniform and integer
// mappings done here rather than by the implementation-defined
// <random> distributions. Same seed, same stream, on any conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    auto v = static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
    return v < n ? v : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Deterministic per-test seed from a master seed and identifying strings.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::string_view> parts);

// Non-deterministic seed for `seed: random` runs.
std::uint64_t random_master_seed();

}  // namespace qutest::sim
