#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "qutest/qasm/ast.hpp"
#include "qutest/sim/circuit.hpp"

namespace qutest::inliner {

// A test body with every call expanded. `statements` holds gate applications
// and measurements only; declarations live in `registers`, in declaration
// order, which also fixes the flat qubit and bit numbering.
struct FlatBody {
  std::vector<qasm::Statement> statements;
  std::vector<qasm::RegisterDecl> registers;
  std::map<int, int> measurement_map;  // flat qubit -> flat bit

  const qasm::RegisterDecl* find_register(std::string_view name) const;
  std::vector<sim::RegisterInfo> layout() const;
};

// Replaces each call with the callee body, substituting formal register names
// with the actual arguments, depth-first and left to right until no calls
// remain. Throws qutest::Error on unknown callees, argument mismatches,
// recursion, and callee-local names that collide with names already in use.
FlatBody inline_calls(const qasm::SubroutineDef& test, const qasm::Program& program);

// Resolves register references to flat indices, expands whole-register
// operands, and emits one measurement operation per measured qubit.
sim::Circuit build_circuit(const FlatBody& flat);

}  // namespace qutest::inliner
