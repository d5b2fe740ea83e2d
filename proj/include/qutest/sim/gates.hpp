#pragma once

#include <span>
#include <string_view>

namespace qutest::sim {

struct GateSpec {
  std::string_view name;
  int qubits;
  int angles;
};

// Built-in gate table enabled by `include "stdgates.inc"`.
std::span<const GateSpec> gate_table();

const GateSpec* find_gate(std::string_view name);

}  // namespace qutest::sim
