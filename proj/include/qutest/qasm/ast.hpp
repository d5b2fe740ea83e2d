#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qutest::qasm {

enum class RegisterKind { Qubit, Bit };

const char* to_string(RegisterKind kind);

struct RegisterDecl {
  RegisterKind kind = RegisterKind::Qubit;
  std::string name;
  int width = 1;
  int line = 0;

  bool operator==(const RegisterDecl&) const = default;
};

// `q[i]` or a whole register `q` when index is empty.
struct RegisterRef {
  std::string name;
  std::optional<int> index;

  bool operator==(const RegisterRef&) const = default;
};

std::string to_string(const RegisterRef& ref);

struct GateApplication {
  std::string gate;
  std::vector<double> angles;
  std::vector<RegisterRef> targets;
  int line = 0;

  bool operator==(const GateApplication&) const = default;
};

// `bits = measure qubits;` or `measure qubits -> bits;`
struct MeasureStmt {
  RegisterRef bits;
  RegisterRef qubits;
  int line = 0;

  bool operator==(const MeasureStmt&) const = default;
};

struct CallStmt {
  std::string callee;
  std::vector<std::string> args;
  int line = 0;

  bool operator==(const CallStmt&) const = default;
};

using Statement = std::variant<RegisterDecl, GateApplication, MeasureStmt, CallStmt>;

int line_of(const Statement& stmt);

struct Param {
  std::string name;
  RegisterKind kind = RegisterKind::Qubit;
  int width = 1;

  bool operator==(const Param&) const = default;
};

struct PragmaLine {
  int line = 0;
  std::string text;  // verbatim, starting at `//%`

  bool operator==(const PragmaLine&) const = default;
};

struct SubroutineDef {
  std::string name;
  std::vector<Param> params;
  std::vector<Statement> body;
  std::vector<PragmaLine> pragma_lines;
  int start_line = 0;
  int end_line = 0;

  // Case-sensitive `test` prefix.
  bool is_test() const { return name.rfind("test", 0) == 0; }
  bool operator==(const SubroutineDef&) const = default;
};

struct Program {
  std::string version;
  std::vector<std::string> includes;
  std::vector<RegisterDecl> declarations;
  std::vector<Statement> statements;  // top-level, declarations excluded
  std::vector<SubroutineDef> subroutines;
  std::vector<PragmaLine> top_level_pragmas;
  std::filesystem::path source_path;

  const SubroutineDef* find_subroutine(std::string_view name) const;
  bool operator==(const Program&) const = default;
};

}  // namespace qutest::qasm
