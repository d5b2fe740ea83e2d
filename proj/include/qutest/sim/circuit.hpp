#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qutest/qasm/ast.hpp"

namespace qutest::sim {

struct Operation {
  std::string name;  // gate name, or "measure"
  std::vector<double> angles;
  std::vector<int> qubits;
  int classical = -1;  // measurement target bit
  int line = 0;

  bool is_measurement() const { return name == "measure"; }
  bool operator==(const Operation&) const = default;
};

// Placement of a named register in the flat qubit / bit index space.
struct RegisterInfo {
  std::string name;
  qasm::RegisterKind kind = qasm::RegisterKind::Qubit;
  int offset = 0;
  int width = 1;

  bool operator==(const RegisterInfo&) const = default;
};

struct Circuit {
  int num_qubits = 0;
  int classical_width = 0;
  std::vector<Operation> ops;
  std::map<int, int> measurement_map;  // qubit -> classical bit
  std::vector<RegisterInfo> registers;

  const RegisterInfo* find_register(std::string_view name) const;
  std::optional<int> qubit_index(std::string_view reg, int index) const;
  std::optional<int> bit_index(std::string_view reg, int index) const;

  bool has_measurements() const { return !measurement_map.empty(); }
  Circuit without_measurements() const;

  bool operator==(const Circuit&) const = default;
};

// Longest chain of operations where two operations conflict iff they share a
// qubit or a classical bit. Measurements count.
int depth(const Circuit& circuit);

// Throws qutest::Error if a gate touches a qubit after it was measured.
void require_terminal_measurements(const Circuit& circuit);

std::string describe(const Operation& op);

}  // namespace qutest::sim
