#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qutest {

enum class Severity { Error, Warning };

// Diagnostic codes emitted by the parser and the linter.
//
//   QT001  error    pragma outside a `def test*()` body
//   QT002  error    unknown directive key
//   QT003  error    malformed directive value
//   QT004  error    operator not valid for the assertion kind
//   QT005  error    reference distribution does not sum to 1
//   QT006  error    configuration key set more than once in a test
//   QT007  warning  runtime not supported by this build
//   QT008  error    test subroutine declares parameters
//   QT009  warning  test has no assertion directives
//   QT010  error    construct not in the supported OpenQASM subset
//   QT011  error    missing OPENQASM version header
//   QT012  error    syntax error
//   QT013  error    undeclared register, index out of range, or bad gate arity
//   QT014  warning  gate applied to a qubit after it was measured
namespace codes {
inline constexpr std::string_view PragmaOutsideTest = "QT001";
inline constexpr std::string_view UnknownKey = "QT002";
inline constexpr std::string_view MalformedValue = "QT003";
inline constexpr std::string_view InvalidOperator = "QT004";
inline constexpr std::string_view DistributionSum = "QT005";
inline constexpr std::string_view DuplicateConfig = "QT006";
inline constexpr std::string_view UnsupportedRuntime = "QT007";
inline constexpr std::string_view TestWithParams = "QT008";
inline constexpr std::string_view NoAssertions = "QT009";
inline constexpr std::string_view UnsupportedConstruct = "QT010";
inline constexpr std::string_view MissingVersion = "QT011";
inline constexpr std::string_view SyntaxError = "QT012";
inline constexpr std::string_view SemanticError = "QT013";
inline constexpr std::string_view GateAfterMeasure = "QT014";
}  // namespace codes

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  int line = 1;
  std::string message;
  std::string hint;

  bool is_error() const { return severity == Severity::Error; }
  bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_error(std::string_view code, int line, std::string message,
                      std::string hint = {});
Diagnostic make_warning(std::string_view code, int line, std::string message,
                        std::string hint = {});

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// "path:line: error QT002: message (hint: ...)"
std::string format_diagnostic(const Diagnostic& d, std::string_view path);

// Raised for evaluation-time failures (inlining, circuit construction,
// simulation). The runner turns these into errored test results.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command-line input or unusable paths; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qutest
