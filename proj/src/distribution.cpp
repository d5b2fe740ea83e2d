#include "qutest/distribution.hpp"

#include <algorithm>
#include <sstream>

namespace qutest {

int Distribution::width() const {
  return entries.empty() ? 0 : static_cast<int>(entries.begin()->first.size());
}

double Distribution::total() const {
  double sum = 0.0;
  for (const auto& [_, p] : entries) sum += p;
  return sum;
}

double Distribution::probability(std::string_view bits) const {
  auto it = entries.find(std::string(bits));
  return it == entries.end() ? 0.0 : it->second;
}

std::uint64_t Counts::count(std::string_view bits) const {
  auto it = entries.find(std::string(bits));
  return it == entries.end() ? 0 : it->second;
}

double Counts::frequency(std::string_view bits) const {
  return shots == 0 ? 0.0 : static_cast<double>(count(bits)) / static_cast<double>(shots);
}

Distribution Counts::to_distribution() const {
  Distribution d;
  for (const auto& [key, n] : entries) {
    d.entries[key] = static_cast<double>(n) / static_cast<double>(shots);
  }
  return d;
}

bool is_bitstring(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

std::string to_string(const Counts& counts) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [key, n] : counts.entries) {
    if (!first) out << ", ";
    first = false;
    out << key << ": " << n;
  }
  out << '}';
  return out.str();
}

std::string to_string(const Distribution& dist) {
  std::ostringstream out;
  out.precision(6);
  out << '{';
  bool first = true;
  for (const auto& [key, p] : dist.entries) {
    if (!first) out << ", ";
    first = false;
    out << key << ": " << p;
  }
  out << '}';
  return out.str();
}

}  // namespace qutest
