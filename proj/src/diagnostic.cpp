#include "qutest/diagnostic.hpp"

#include <algorithm>

namespace qutest {

Diagnostic make_error(std::string_view code, int line, std::string message, std::string hint) {
  return Diagnostic{Severity::Error, std::string(code), line, std::move(message), std::move(hint)};
}

Diagnostic make_warning(std::string_view code, int line, std::string message,
                        std::string hint) {
  return Diagnostic{Severity::Warning, std::string(code), line, std::move(message),
                    std::move(hint)};
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

std::string format_diagnostic(const Diagnostic& d, std::string_view path) {
  std::string out;
  out.append(path).append(":").append(std::to_string(d.line)).append(": ");
  out.append(d.is_error() ? "error " : "warning ");
  out.append(d.code).append(": ").append(d.message);
  if (!d.hint.empty()) out.append(" (hint: ").append(d.hint).append(")");
  return out;
}

}  // namespace qutest
