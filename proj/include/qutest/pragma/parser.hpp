#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "qutest/diagnostic.hpp"
#include "qutest/pragma/directives.hpp"
#include "qutest/qasm/ast.hpp"

namespace qutest::pragma {

using ParsedPragma = std::variant<ConfigDirective, AssertionDirective, Diagnostic>;

// Parses one `//%` line. Every input yields exactly one directive or one
// diagnostic; nothing is silently dropped.
ParsedPragma parse_pragma_line(std::string_view raw, int line);

// Every directive key the grammar accepts: config keys, then `assert.<kind>`.
const std::vector<std::string>& known_keys();

struct TestDirectives {
  std::vector<ConfigDirective> config;
  std::vector<AssertionDirective> assertions;
  std::vector<Diagnostic> diagnostics;  // parse errors plus duplicate config keys
};

// Parses all pragma lines of one test body, in source order.
TestDirectives parse_test_directives(const qasm::SubroutineDef& test);

}  // namespace qutest::pragma
