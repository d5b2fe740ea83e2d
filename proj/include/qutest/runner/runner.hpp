#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qutest/assert/engine.hpp"
#include "qutest/diagnostic.hpp"
#include "qutest/pragma/parser.hpp"
#include "qutest/qasm/ast.hpp"
#include "qutest/qasm/discovery.hpp"
#include "qutest/sim/simulator.hpp"

namespace qutest::runner {

// Version string reported by the built-in runtime.
inline constexpr std::string_view kNativeVersion = "0.1.0";

using assertion::Status;

struct TestCase {
  std::string file_path;  // display path
  std::string name;
  int source_index = 0;  // position among the file's tests
  int line = 0;
  std::shared_ptr<const qasm::Program> program;  // null for unparseable files
  pragma::TestDirectives directives;
  // Lint errors anywhere in the file; a non-empty list turns the test into an error.
  std::vector<Diagnostic> blocking;

  const qasm::SubroutineDef* definition() const;
};

struct TestResult {
  std::string test_name;
  std::string file_path;
  std::string runtime_label;  // "native" or "runtime@version"
  std::uint64_t seed_used = 0;
  std::vector<assertion::AssertionResult> assertions;  // structural first, then directive order
  Status status = Status::Pass;
  std::string error;  // setup or probe failure, empty otherwise
  int line = 0;
  double duration_seconds = 0.0;
};

// pass iff every assertion passed and there was no setup error; error if
// anything errored; fail otherwise.
Status aggregate_status(const TestResult& result);

struct RunReport {
  std::vector<TestResult> results;
  std::uint64_t master_seed = 0;
  double wall_clock_seconds = 0.0;

  std::size_t total() const { return results.size(); }
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t errored() const;
  int exit_code() const;
};

// Thrown when a runtime cannot execute tests.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

using ShotRunner = std::function<Counts(const sim::Circuit&, const sim::ShotRequest&)>;

struct ProbeOptions {
  // Where `.qutest/runtimes/...` lives; empty disables the cache file.
  std::filesystem::path cache_root;
  // Simulator used by the probe; defaults to sim::run_shots.
  ShotRunner simulate;
};

// Runs a deterministic X-then-measure oracle (16 shots, every outcome "1") on
// the native runtime. Other runtimes, and native versions other than
// kNativeVersion, throw CompatibilityError, as does an oracle violation.
void probe_runtime(std::string_view runtime, const std::optional<std::string>& version,
                   const ProbeOptions& options = {});

struct ExecutionGroup {
  std::string runtime;
  std::optional<std::string> version;
  std::string label;
  std::vector<std::size_t> tests;  // indices into the planned test list, discovery order
};

// One group per distinct (runtime, version) pair; tests without
// runtime_version go to the group of their runtime alone. A test listing k
// versions appears in k groups. Groups are ordered by first appearance.
std::vector<ExecutionGroup> plan(const std::vector<TestCase>& tests);

struct ExecuteOptions {
  std::uint64_t seed = 0;
  sim::NoiseModel noise;
};

// Runs one test under `runtime_label`. Never throws; failures become errors.
TestResult execute_test(const TestCase& test, const std::string& runtime_label,
                        const ExecuteOptions& options);

// The tests of a set of discovered files. Unparseable files contribute a
// single errored "<parse>" case.
std::vector<TestCase> collect_tests(const std::vector<qasm::DiscoveredFile>& files);

struct RunOptions {
  std::optional<std::uint64_t> seed;  // master seed; random when empty
  unsigned jobs = 1;
  std::filesystem::path cache_root = ".";
  sim::NoiseModel noise;
  ShotRunner probe_simulate;  // test hook for the compatibility probe
};

// Per-test seed: the explicit `seed:` pragma, or one derived from the master
// seed, the file path, the test name and the runtime label.
std::uint64_t resolve_seed(const TestCase& test, std::uint64_t master_seed,
                           const std::string& runtime_label);

RunReport run_tests(const std::vector<TestCase>& tests, const RunOptions& options);

// Discovers, plans and runs. Throws UsageError for missing paths.
RunReport run(const std::vector<std::filesystem::path>& paths, const RunOptions& options);

}  // namespace qutest::runner
