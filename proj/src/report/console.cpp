#include <clocale>
#include <cstdio>
#include <sstream>
#include <string>

#include "qutest/report/report.hpp"

namespace qutest::report {

namespace {

constexpr const char* kGreen = "\033[32m";
constexpr const char* kRed = "\033[31m";
constexpr const char* kYellow = "\033[33m";
constexpr const char* kReset = "\033[0m";

std::string marker(assertion::Status status, const ConsoleOptions& o) {
  const char* text = nullptr;
  const char* color = nullptr;
  switch (status) {
    case assertion::Status::Pass:
      text = o.unicode ? "✓" : "[PASS]";
      color = kGreen;
      break;
    case assertion::Status::Fail:
      text = o.unicode ? "✗" : "[FAIL]";
      color = kRed;
      break;
    case assertion::Status::Error:
      text = o.unicode ? "E" : "[ERROR]";
      color = kYellow;
      break;
  }
  if (!o.color) return text;
  return std::string(color) + text + kReset;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

void indent_lines(std::ostringstream& out, const std::string& text, const char* prefix) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out << prefix << line << '\n';
}

}  // namespace

bool locale_supports_unicode() {
  for (const char* var : {"LC_ALL", "LC_CTYPE", "LANG"}) {
    const char* v = std::getenv(var);
    if (v && *v) {
      std::string s(v);
      for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      return s.find("utf-8") != std::string::npos || s.find("utf8") != std::string::npos;
    }
  }
  return false;
}

std::string render_console(const runner::RunReport& report, const ConsoleOptions& options) {
  std::ostringstream out;
  out << "qutest: " << report.total() << " test" << (report.total() == 1 ? "" : "s")
      << ", master seed " << report.master_seed << "\n";

  std::string current_file;
  bool first = true;
  for (const auto& r : report.results) {
    if (first || r.file_path != current_file) {
      out << "\n" << r.file_path << "\n";
      current_file = r.file_path;
      first = false;
    }
    out << "  " << marker(r.status, options) << ' ' << r.test_name << " [" << r.runtime_label
        << "] " << seconds(r.duration_seconds) << "\n";
    if (!r.error.empty()) indent_lines(out, r.error, "      ");
    for (const auto& a : r.assertions) {
      if (!options.verbose && a.status == assertion::Status::Pass) continue;
      out << "    " << marker(a.status, options) << " line " << a.line << ' '
          << pragma::to_string(a.kind) << ": " << a.message << "\n";
    }
  }

  out << "\n" << report.passed() << " passed, " << report.failed() << " failed, "
      << report.errored() << " errored (" << report.total() << " total) in "
      << seconds(report.wall_clock_seconds) << "; master seed " << report.master_seed << "\n";
  return out.str();
}

}  // namespace qutest::report
