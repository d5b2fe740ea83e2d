#include "qutest/sim/gates.hpp"

#include <array>

namespace qutest::sim {

namespace {

constexpr std::array<GateSpec, 19> kGates{{
    {"h", 1, 0},   {"x", 1, 0},    {"y", 1, 0},  {"z", 1, 0},   {"s", 1, 0},
    {"sdg", 1, 0}, {"t", 1, 0},    {"tdg", 1, 0}, {"sx", 1, 0},  {"rx", 1, 1},
    {"ry", 1, 1},  {"rz", 1, 1},   {"p", 1, 1},  {"u", 1, 3},   {"cx", 2, 0},
    {"cz", 2, 0},  {"cp", 2, 1},   {"swap", 2, 0}, {"ccx", 3, 0},
}};

}  // namespace

std::span<const GateSpec> gate_table() { return kGates; }

const GateSpec* find_gate(std::string_view name) {
  for (const auto& g : kGates) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

}  // namespace qutest::sim
