#include "qutest/pragma/lint.hpp"

#include <algorithm>
#include <set>

#include "qutest/inliner/inliner.hpp"
#include "qutest/pragma/parser.hpp"
#include "qutest/qasm/parser.hpp"

namespace qutest::pragma {

namespace {

bool is_assertion_line(std::string_view text) {
  auto pos = text.find_first_not_of(" \t", 3);  // after `//%`
  return pos != std::string_view::npos && text.substr(pos).rfind("assert", 0) == 0;
}

void check_measurement_order(const qasm::SubroutineDef& test, const qasm::Program& program,
                             std::vector<Diagnostic>& out) {
  sim::Circuit circuit;
  try {
    circuit = inliner::build_circuit(inliner::inline_calls(test, program));
  } catch (const Error&) {
    return;  // reported when the test runs
  }
  std::set<int> measured;
  std::set<int> reported_lines;
  for (const auto& op : circuit.ops) {
    if (op.is_measurement()) {
      measured.insert(op.qubits.front());
      continue;
    }
    const bool after = std::any_of(op.qubits.begin(), op.qubits.end(),
                                   [&](int q) { return measured.count(q) != 0; });
    if (after && reported_lines.insert(op.line).second) {
      out.push_back(make_warning(codes::GateAfterMeasure, op.line,
                                 "gate '" + op.name + "' acts on a qubit that was already measured",
                                 "move measurements to the end of the test"));
    }
  }
}

}  // namespace

std::vector<Diagnostic> lint_source(std::string_view source, const std::filesystem::path& path) {
  auto parsed = qasm::parse_program_recovering(source, path);
  std::vector<Diagnostic> out = std::move(parsed.diagnostics);
  const auto& program = parsed.program;

  for (const auto& p : program.top_level_pragmas) {
    out.push_back(make_error(codes::PragmaOutsideTest, p.line,
                             "pragma outside a test subroutine",
                             "move it inside a 'def test...() { }' body"));
  }
  for (const auto& def : program.subroutines) {
    if (!def.is_test()) {
      for (const auto& p : def.pragma_lines) {
        out.push_back(make_error(codes::PragmaOutsideTest, p.line,
                                 "pragma inside '" + def.name + "', which is not a test",
                                 "pragmas only apply inside subroutines named test*"));
      }
      continue;
    }
    auto directives = parse_test_directives(def);
    out.insert(out.end(), directives.diagnostics.begin(), directives.diagnostics.end());
    if (!def.params.empty()) {
      out.push_back(make_error(codes::TestWithParams, def.start_line,
                               "test '" + def.name + "' declares parameters",
                               "tests take no parameters; declare registers inside the body"));
    }
    const bool any_assertion = std::any_of(def.pragma_lines.begin(), def.pragma_lines.end(),
                                           [](const auto& p) { return is_assertion_line(p.text); });
    if (!any_assertion) {
      out.push_back(make_warning(codes::NoAssertions, def.start_line,
                                 "test '" + def.name + "' has no assertions",
                                 "add e.g. '//% assert.output: == \"0\"'"));
    }
    for (const auto& c : directives.config) {
      if (c.key == ConfigKey::Runtime && c.runtime != kNativeRuntime) {
        out.push_back(make_warning(codes::UnsupportedRuntime, c.line,
                                   "runtime '" + c.runtime + "' is not supported by this build",
                                   "the test will report a compatibility error; use 'runtime: native'"));
      }
    }
    check_measurement_order(def, program, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return a.line != b.line ? a.line < b.line : a.code < b.code;
  });
  return out;
}

std::vector<FileDiagnostics> lint(const std::vector<qasm::DiscoveredFile>& files) {
  std::vector<FileDiagnostics> out;
  out.reserve(files.size());
  for (const auto& f : files) {
    out.push_back(FileDiagnostics{f.display_path, lint_source(f.source, f.path)});
  }
  return out;
}

}  // namespace qutest::pragma
