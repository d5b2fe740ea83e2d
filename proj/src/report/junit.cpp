#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "qutest/report/report.hpp"

namespace qutest::report {

namespace {

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

std::string assertion_line(const assertion::AssertionResult& a) {
  std::string s = std::string(pragma::to_string(a.kind)) + " (line " + std::to_string(a.line) + ")";
  if (!a.actual_text.empty()) s += ": actual " + a.actual_text + ", expected " + a.expected;
  if (!a.message.empty()) s += " - " + a.message;
  return s;
}

struct Suite {
  std::string name;
  std::vector<const runner::TestResult*> results;
  std::size_t failures = 0, errors = 0;
  double time = 0.0;
};

}  // namespace

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          out += '?';
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string render_junit_xml(const runner::RunReport& report) {
  std::vector<Suite> suites;
  std::map<std::string, std::size_t> by_file;
  for (const auto& r : report.results) {
    auto it = by_file.find(r.file_path);
    if (it == by_file.end()) {
      it = by_file.emplace(r.file_path, suites.size()).first;
      suites.push_back(Suite{r.file_path, {}, 0, 0, 0.0});
    }
    auto& s = suites[it->second];
    s.results.push_back(&r);
    if (r.status == assertion::Status::Fail) ++s.failures;
    if (r.status == assertion::Status::Error) ++s.errors;
    s.time += r.duration_seconds;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuites name=\"qutest\" tests=\"" << report.total() << "\" failures=\""
      << report.failed() << "\" errors=\"" << report.errored() << "\" time=\""
      << fmt_time(report.wall_clock_seconds) << "\">\n";
  for (const auto& s : suites) {
    out << "  <testsuite name=\"" << xml_escape(s.name) << "\" tests=\"" << s.results.size()
        << "\" failures=\"" << s.failures << "\" errors=\"" << s.errors << "\" skipped=\"0\" time=\""
        << fmt_time(s.time) << "\">\n";
    for (const auto* r : s.results) {
      out << "    <testcase name=\"" << xml_escape(r->test_name + "[" + r->runtime_label + "]")
          << "\" classname=\"" << xml_escape(r->file_path) << "\" time=\""
          << fmt_time(r->duration_seconds) << "\"";
      if (r->status == assertion::Status::Pass) {
        out << "/>\n";
        continue;
      }
      out << ">\n";
      const bool is_error = r->status == assertion::Status::Error;
      const auto wanted = is_error ? assertion::Status::Error : assertion::Status::Fail;
      std::string body;
      std::string message = r->error;
      if (!r->error.empty()) body = r->error + "\n";
      for (const auto& a : r->assertions) {
        if (a.status != wanted) continue;
        body += assertion_line(a) + "\n";
        if (message.empty()) message = assertion_line(a);
      }
      const char* tag = is_error ? "error" : "failure";
      out << "      <" << tag << " message=\"" << xml_escape(message) << "\" type=\""
          << (is_error ? "error" : "assertion") << "\">" << xml_escape(body) << "</" << tag << ">\n";
      out << "      <system-out>seed " << r->seed_used << "</system-out>\n";
      out << "    </testcase>\n";
    }
    out << "  </testsuite>\n";
  }
  out << "</testsuites>\n";
  return out.str();
}

}  // namespace qutest::report
