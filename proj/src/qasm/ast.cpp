#include "qutest/qasm/ast.hpp"

namespace qutest::qasm {

const char* to_string(RegisterKind kind) { return kind == RegisterKind::Qubit ? "qubit" : "bit"; }

std::string to_string(const RegisterRef& ref) {
  if (!ref.index) return ref.name;
  return ref.name + "[" + std::to_string(*ref.index) + "]";
}

int line_of(const Statement& stmt) {
  return std::visit([](const auto& s) { return s.line; }, stmt);
}

const SubroutineDef* Program::find_subroutine(std::string_view name) const {
  for (const auto& def : subroutines) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

}  // namespace qutest::qasm
