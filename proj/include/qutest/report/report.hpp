#pragma once

#include <string>
#include <string_view>

#include "qutest/runner/runner.hpp"

namespace qutest::report {

struct ConsoleOptions {
  bool verbose = false;  // show every assertion, not just the failing ones
  bool color = false;
  bool unicode = true;  // ✓ ✗ markers; [PASS] [FAIL] [ERROR] otherwise
};

std::string render_console(const runner::RunReport& report, const ConsoleOptions& options);

// JUnit 4 layout: testsuites / testsuite (one per file) / testcase.
std::string render_junit_xml(const runner::RunReport& report);

// Escapes text for XML content and attribute values. Characters XML 1.0
// cannot carry are replaced with '?'.
std::string xml_escape(std::string_view text);

// Whether the process locale can print ✓ and ✗.
bool locale_supports_unicode();

}  // namespace qutest::report
