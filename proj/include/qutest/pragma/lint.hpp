#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qutest/diagnostic.hpp"
#include "qutest/qasm/discovery.hpp"

namespace qutest::pragma {

// Static checks over one file, without running anything: parse errors, every
// pragma parsed, pragmas outside `def test*()`, parameterised tests, tests
// with no assertions, unsupported runtimes, and gates after measurement.
// Never throws on bad input; results are sorted by line.
std::vector<Diagnostic> lint_source(std::string_view source,
                                    const std::filesystem::path& path = {});

struct FileDiagnostics {
  std::string display_path;
  std::vector<Diagnostic> diagnostics;
};

std::vector<FileDiagnostics> lint(const std::vector<qasm::DiscoveredFile>& files);

}  // namespace qutest::pragma
