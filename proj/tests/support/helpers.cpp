#include "helpers.hpp"

#include <atomic>
#include <stdexcept>
#include <unistd.h>

#include "qutest/inliner/inliner.hpp"

namespace testing_support {

std::filesystem::path source_dir() { return QUTEST_SOURCE_DIR; }
std::filesystem::path corpus_dir() { return source_dir() / "tests" / "corpus"; }
std::filesystem::path fixtures_dir() { return source_dir() / "tests" / "fixtures"; }

qutest::qasm::Program program_of(const std::string& source) {
  auto parsed = qutest::qasm::parse_program(source);
  if (!parsed.ok()) {
    std::string msg = "fixture does not parse:";
    for (const auto& d : parsed.diagnostics) msg += "\n  " + qutest::format_diagnostic(d, "<src>");
    throw std::runtime_error(msg);
  }
  return *parsed.program;
}

qutest::sim::Circuit circuit_of(const std::string& source, const std::string& test) {
  const auto program = program_of(source);
  const auto* def = program.find_subroutine(test);
  if (!def) throw std::runtime_error("no test " + test);
  return qutest::inliner::build_circuit(qutest::inliner::inline_calls(*def, program));
}

std::filesystem::path temp_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("qutest-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing_support
