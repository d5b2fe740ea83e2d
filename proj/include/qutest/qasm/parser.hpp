#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "qutest/diagnostic.hpp"
#include "qutest/qasm/ast.hpp"

namespace qutest::qasm {

struct ParseResult {
  std::optional<Program> program;  // empty whenever diagnostics hold an error
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program.has_value(); }
};

// Parses the supported OpenQASM 3 subset. Comment lines starting with `//%`
// are captured verbatim and attached to the enclosing subroutine.
ParseResult parse_program(std::string_view source, const std::filesystem::path& path = {});

// Same grammar, but keeps going after errors and always hands back the
// best-effort Program. Used by the linter so one bad statement does not hide
// pragma problems further down the file.
struct RecoveredParse {
  Program program;
  std::vector<Diagnostic> diagnostics;
};
RecoveredParse parse_program_recovering(std::string_view source,
                                        const std::filesystem::path& path = {});

// Subroutines whose name starts with `test`, in source order.
std::vector<const SubroutineDef*> list_tests(const Program& program);

}  // namespace qutest::qasm
