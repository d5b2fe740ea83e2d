#include "qutest/sim/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qutest/diagnostic.hpp"

namespace qutest::sim {

const RegisterInfo* Circuit::find_register(std::string_view name) const {
  for (const auto& r : registers) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::optional<int> Circuit::qubit_index(std::string_view reg, int index) const {
  const auto* r = find_register(reg);
  if (r == nullptr || r->kind != qasm::RegisterKind::Qubit || index < 0 || index >= r->width) {
    return std::nullopt;
  }
  return r->offset + index;
}

std::optional<int> Circuit::bit_index(std::string_view reg, int index) const {
  const auto* r = find_register(reg);
  if (r == nullptr || r->kind != qasm::RegisterKind::Bit || index < 0 || index >= r->width) {
    return std::nullopt;
  }
  return r->offset + index;
}

Circuit Circuit::without_measurements() const {
  Circuit copy = *this;
  std::erase_if(copy.ops, [](const Operation& op) { return op.is_measurement(); });
  copy.measurement_map.clear();
  return copy;
}

int depth(const Circuit& circuit) {
  std::vector<int> qubit_front(static_cast<std::size_t>(circuit.num_qubits), 0);
  std::vector<int> bit_front(static_cast<std::size_t>(circuit.classical_width), 0);
  int result = 0;
  for (const auto& op : circuit.ops) {
    int layer = 0;
    for (int q : op.qubits) layer = std::max(layer, qubit_front[static_cast<std::size_t>(q)]);
    if (op.classical >= 0) layer = std::max(layer, bit_front[static_cast<std::size_t>(op.classical)]);
    ++layer;
    for (int q : op.qubits) qubit_front[static_cast<std::size_t>(q)] = layer;
    if (op.classical >= 0) bit_front[static_cast<std::size_t>(op.classical)] = layer;
    result = std::max(result, layer);
  }
  return result;
}

void require_terminal_measurements(const Circuit& circuit) {
  std::set<int> measured;
  for (const auto& op : circuit.ops) {
    if (op.is_measurement()) {
      measured.insert(op.qubits.front());
      continue;
    }
    for (int q : op.qubits) {
      if (measured.count(q) != 0) {
        throw Error("line " + std::to_string(op.line) + ": gate '" + op.name +
                    "' acts on qubit " + std::to_string(q) +
                    " after it was measured (mid-circuit measurement is not supported)");
      }
    }
  }
}

std::string describe(const Operation& op) {
  std::ostringstream out;
  out << op.name;
  if (!op.angles.empty()) {
    out << '(';
    for (std::size_t i = 0; i < op.angles.size(); ++i) out << (i ? "," : "") << op.angles[i];
    out << ')';
  }
  for (std::size_t i = 0; i < op.qubits.size(); ++i) out << (i ? "," : " ") << op.qubits[i];
  if (op.is_measurement()) out << " -> " << op.classical;
  return out.str();
}

}  // namespace qutest::sim
