#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace qutest {

// Bitstring keys put classical bit 0 in the RIGHTMOST character.
struct Distribution {
  std::map<std::string, double> entries;

  // Length of the keys; 0 when empty.
  int width() const;
  double total() const;
  double probability(std::string_view bits) const;

  bool operator==(const Distribution&) const = default;
};

struct Counts {
  std::map<std::string, std::uint64_t> entries;
  std::uint64_t shots = 0;
  int width = 0;

  std::uint64_t count(std::string_view bits) const;
  double frequency(std::string_view bits) const;
  Distribution to_distribution() const;

  bool operator==(const Counts&) const = default;
};

// Classical bit `index` of a bitstring key.
inline int bit_at(std::string_view bits, int index) {
  return bits[bits.size() - 1 - static_cast<std::size_t>(index)] == '1' ? 1 : 0;
}

bool is_bitstring(std::string_view s);

// "{00: 512, 11: 512}"
std::string to_string(const Counts& counts);
std::string to_string(const Distribution& dist);

}  // namespace qutest
