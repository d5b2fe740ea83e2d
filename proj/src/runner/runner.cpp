#include "qutest/runner/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <thread>

#include <json.hpp>

#include "qutest/inliner/inliner.hpp"
#include "qutest/pragma/lint.hpp"
#include "qutest/sim/rng.hpp"

namespace qutest::runner {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string path_component(std::string_view s) {
  std::string out;
  for (char c : s) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-';
    out += ok ? c : '_';
  }
  if (out.empty() || out == "." || out == "..") out = "_" + out;
  return out;
}

void write_probe_cache(const std::filesystem::path& root, std::string_view runtime,
                       const std::optional<std::string>& version, std::string_view status,
                       const Counts* counts, const std::string& message) {
  if (root.empty()) return;
  std::string dir_version = version ? *version : "default";
  if (!version && runtime == pragma::kNativeRuntime) dir_version = std::string(kNativeVersion);
  const auto dir = root / ".qutest" / "runtimes" / path_component(runtime) / path_component(dir_version);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // the cache is advisory
  nlohmann::json j;
  j["status"] = status;
  j["timestamp"] = utc_timestamp();
  j["oracleCounts"] = nlohmann::json::object();
  if (counts) {
    for (const auto& [k, n] : counts->entries) j["oracleCounts"][k] = n;
  }
  if (!message.empty()) j["message"] = message;
  std::ofstream out(dir / "probe.json");
  out << j.dump(2) << '\n';
}

std::string label_for(const std::string& runtime, const std::optional<std::string>& version) {
  return version ? runtime + "@" + *version : runtime;
}

std::vector<std::optional<std::string>> versions_of(const TestCase& test) {
  const auto config = pragma::collect_config(test.directives.config);
  std::vector<std::optional<std::string>> out;
  if (config.runtime_versions.empty()) {
    out.emplace_back(std::nullopt);
  } else {
    for (const auto& v : config.runtime_versions) out.emplace_back(v);
  }
  return out;
}

std::string runtime_of(const TestCase& test) {
  return pragma::collect_config(test.directives.config).runtime;
}

TestResult errored(const TestCase& test, const std::string& label, std::string message) {
  TestResult r;
  r.test_name = test.name;
  r.file_path = test.file_path;
  r.runtime_label = label;
  r.line = test.line;
  r.error = std::move(message);
  r.status = Status::Error;
  return r;
}

std::string summarize(const std::vector<Diagnostic>& diagnostics, const std::string& path) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!d.is_error()) continue;
    if (!out.empty()) out += "\n";
    out += format_diagnostic(d, path);
  }
  return out;
}

}  // namespace

const qasm::SubroutineDef* TestCase::definition() const {
  return program ? program->find_subroutine(name) : nullptr;
}

Status aggregate_status(const TestResult& result) {
  if (!result.error.empty()) return Status::Error;
  bool failed = false;
  for (const auto& a : result.assertions) {
    if (a.status == Status::Error) return Status::Error;
    if (a.status == Status::Fail) failed = true;
  }
  return failed ? Status::Fail : Status::Pass;
}

std::size_t RunReport::passed() const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const auto& r) { return r.status == Status::Pass; }));
}
std::size_t RunReport::failed() const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const auto& r) { return r.status == Status::Fail; }));
}
std::size_t RunReport::errored() const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const auto& r) { return r.status == Status::Error; }));
}
int RunReport::exit_code() const { return passed() == total() ? 0 : 1; }

void probe_runtime(std::string_view runtime, const std::optional<std::string>& version,
                   const ProbeOptions& options) {
  if (runtime != pragma::kNativeRuntime) {
    const std::string msg =
        "runtime '" + label_for(std::string(runtime), version) + "' not supported by this build";
    write_probe_cache(options.cache_root, runtime, version, "unsupported", nullptr, msg);
    throw CompatibilityError(msg);
  }
  if (version && *version != kNativeVersion) {
    const std::string msg = "runtime 'native' provides version " + std::string(kNativeVersion) +
                            ", not " + *version;
    write_probe_cache(options.cache_root, runtime, version, "unsupported", nullptr, msg);
    throw CompatibilityError(msg);
  }

  sim::Circuit oracle;
  oracle.num_qubits = 1;
  oracle.classical_width = 1;
  oracle.ops = {sim::Operation{"x", {}, {0}, -1, 0}, sim::Operation{"measure", {}, {0}, 0, 0}};
  oracle.measurement_map = {{0, 0}};
  sim::ShotRequest request;
  request.shots = 16;
  request.seed = 0;

  Counts counts;
  try {
    counts = options.simulate ? options.simulate(oracle, request) : sim::run_shots(oracle, request);
  } catch (const std::exception& e) {
    const std::string msg = std::string("compatibility probe could not run: ") + e.what();
    write_probe_cache(options.cache_root, runtime, version, "failed", nullptr, msg);
    throw CompatibilityError(msg);
  }
  const bool ok = counts.shots == 16 && counts.count("1") == 16;
  if (!ok) {
    const std::string msg =
        "compatibility probe failed: X then measure gave " + to_string(counts) + ", expected all \"1\"";
    write_probe_cache(options.cache_root, runtime, version, "failed", &counts, msg);
    throw CompatibilityError(msg);
  }
  write_probe_cache(options.cache_root, runtime, version, "ok", &counts, {});
}

std::vector<ExecutionGroup> plan(const std::vector<TestCase>& tests) {
  std::vector<ExecutionGroup> groups;
  std::map<std::pair<std::string, std::optional<std::string>>, std::size_t> index;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto runtime = runtime_of(tests[i]);
    for (const auto& version : versions_of(tests[i])) {
      auto key = std::make_pair(runtime, version);
      auto it = index.find(key);
      if (it == index.end()) {
        it = index.emplace(key, groups.size()).first;
        groups.push_back(ExecutionGroup{runtime, version, label_for(runtime, version), {}});
      }
      groups[it->second].tests.push_back(i);
    }
  }
  return groups;
}

TestResult execute_test(const TestCase& test, const std::string& runtime_label,
                        const ExecuteOptions& options) {
  const auto start = Clock::now();
  TestResult result;
  result.test_name = test.name;
  result.file_path = test.file_path;
  result.runtime_label = runtime_label;
  result.line = test.line;
  result.seed_used = options.seed;

  auto finish = [&]() -> TestResult {
    result.status = aggregate_status(result);
    result.duration_seconds = seconds_since(start);
    return result;
  };

  if (!test.blocking.empty()) {
    result.error = "lint errors in " + test.file_path + ":\n" + summarize(test.blocking, test.file_path);
    return finish();
  }
  const auto* def = test.definition();
  if (!def) {
    result.error = "test '" + test.name + "' not found";
    return finish();
  }

  // (1) inline and build
  sim::Circuit circuit;
  try {
    circuit = inliner::build_circuit(inliner::inline_calls(*def, *test.program));
  } catch (const std::exception& e) {
    result.error = e.what();
    return finish();
  }

  const auto& directives = test.directives.assertions;
  assertion::EvaluationInputs inputs;
  inputs.circuit = &circuit;

  // (2) structural checks, before anything is simulated
  bool needs_shots = false, needs_state = false, needs_ideal = false;
  for (const auto& d : directives) {
    if (pragma::is_structural(d.kind)) {
      result.assertions.push_back(assertion::evaluate(d, inputs));
      continue;
    }
    if (d.kind == pragma::AssertionKind::Entangled) {
      needs_state = true;
    } else {
      needs_shots = true;
      if (d.kind == pragma::AssertionKind::Fidelity) needs_ideal = true;
    }
  }

  const auto config = pragma::collect_config(test.directives.config);
  Counts counts;
  sim::Statevector state;
  Distribution ideal;
  try {
    // (3) sampling
    if (needs_shots) {
      sim::ShotRequest request;
      request.shots = config.shots;
      request.seed = options.seed;
      request.backend = config.backend;
      request.noise = options.noise;
      counts = sim::run_shots(circuit, request);
      inputs.counts = &counts;
    }
    // (4) measurement-free simulation
    if (needs_state) {
      state = sim::statevector(circuit);
      inputs.state = &state;
    }
    if (needs_ideal) {
      ideal = sim::ideal_distribution(circuit);
      inputs.ideal = &ideal;
    }
  } catch (const std::exception& e) {
    result.error = e.what();
    return finish();
  }

  // (5) remaining assertions, in directive order
  for (const auto& d : directives) {
    if (!pragma::is_structural(d.kind)) result.assertions.push_back(assertion::evaluate(d, inputs));
  }
  return finish();
}

std::vector<TestCase> collect_tests(const std::vector<qasm::DiscoveredFile>& files) {
  std::vector<TestCase> tests;
  for (const auto& file : files) {
    if (!file.parse.ok()) {
      TestCase pseudo;
      pseudo.file_path = file.display_path;
      pseudo.name = "<parse>";
      pseudo.blocking = file.parse.diagnostics;
      if (std::none_of(pseudo.blocking.begin(), pseudo.blocking.end(),
                       [](const auto& d) { return d.is_error(); })) {
        pseudo.blocking.push_back(make_error(codes::SyntaxError, 0, "file could not be parsed"));
      }
      tests.push_back(std::move(pseudo));
      continue;
    }
    auto program = std::make_shared<const qasm::Program>(*file.parse.program);
    std::vector<Diagnostic> blocking;
    for (auto& d : pragma::lint_source(file.source, file.path)) {
      if (d.is_error()) blocking.push_back(std::move(d));
    }
    int index = 0;
    for (const auto* def : qasm::list_tests(*program)) {
      TestCase t;
      t.file_path = file.display_path;
      t.name = def->name;
      t.source_index = index++;
      t.line = def->start_line;
      t.program = program;
      t.directives = pragma::parse_test_directives(*def);
      t.blocking = blocking;
      tests.push_back(std::move(t));
    }
  }
  return tests;
}

std::uint64_t resolve_seed(const TestCase& test, std::uint64_t master_seed,
                           const std::string& runtime_label) {
  const auto config = pragma::collect_config(test.directives.config);
  if (config.seed) return *config.seed;
  return sim::derive_seed(master_seed, {test.file_path, test.name, runtime_label});
}

RunReport run_tests(const std::vector<TestCase>& tests, const RunOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.master_seed = options.seed ? *options.seed : sim::random_master_seed();

  // Probe each group once; remember the verdict by label.
  std::map<std::string, std::string> probe_failures;
  ProbeOptions probe_options{options.cache_root, options.probe_simulate};
  for (const auto& group : plan(tests)) {
    try {
      probe_runtime(group.runtime, group.version, probe_options);
    } catch (const std::exception& e) {
      probe_failures[group.label] = e.what();
    }
  }

  // One work item per (test, label), laid out in report order.
  struct Item {
    std::size_t test;
    std::string label;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const auto runtime = runtime_of(tests[i]);
    for (const auto& version : versions_of(tests[i])) items.push_back({i, label_for(runtime, version)});
  }

  report.results.resize(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      const auto& item = items[k];
      const auto& test = tests[item.test];
      auto failure = probe_failures.find(item.label);
      if (failure != probe_failures.end()) {
        report.results[k] = errored(test, item.label,
                                    "compatibility error (" + item.label + "): " + failure->second);
        report.results[k].seed_used = resolve_seed(test, report.master_seed, item.label);
        continue;
      }
      ExecuteOptions exec{resolve_seed(test, report.master_seed, item.label), options.noise};
      report.results[k] = execute_test(test, item.label, exec);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(items.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  report.wall_clock_seconds = seconds_since(start);
  return report;
}

RunReport run(const std::vector<std::filesystem::path>& paths, const RunOptions& options) {
  return run_tests(collect_tests(qasm::discover(paths)), options);
}

}  // namespace qutest::runner
