#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qutest/distribution.hpp"
#include "qutest/sim/simulator.hpp"

namespace qutest::pragma {

// --- configuration ----------------------------------------------------------

enum class ConfigKey { Shots, Seed, Backend, Runtime, RuntimeVersion };

const char* to_string(ConfigKey key);

struct ConfigDirective {
  ConfigKey key = ConfigKey::Shots;
  std::uint64_t shots = 0;
  std::optional<std::uint64_t> seed;  // empty = random
  sim::Backend backend = sim::Backend::Ideal;
  std::string runtime;
  std::vector<std::string> versions;
  int line = 0;
};

inline constexpr std::string_view kNativeRuntime = "native";

struct TestConfig {
  std::uint64_t shots = 1024;
  std::optional<std::uint64_t> seed;  // empty = random
  sim::Backend backend = sim::Backend::Ideal;
  std::string runtime{kNativeRuntime};
  std::vector<std::string> runtime_versions;  // empty = run once in the active runtime

  bool operator==(const TestConfig&) const = default;
};

TestConfig collect_config(const std::vector<ConfigDirective>& directives);

// "shots=1024 seed=random backend=ideal runtime=native runtime_version=-"
std::string to_string(const TestConfig& config);

// --- assertions -------------------------------------------------------------

enum class Op { Less, LessEqual, Equal, Greater, GreaterEqual, NotEqual, Approx };

const char* to_string(Op op);

struct ComparisonSpec {
  Op op = Op::Equal;
  double threshold = 0.0;
  std::optional<double> atol;  // present exactly when op == Approx

  bool operator==(const ComparisonSpec&) const = default;
};

// "~= 0.5 atol=0.05", ">= 0.05"
std::string to_string(const ComparisonSpec& spec);

enum class AssertionKind {
  Output,
  Tvd,
  Hellinger,
  Kl,
  Chi2,
  Marginal,
  Observable,
  Entropy,
  Correlation,
  Probability,
  MostFrequent,
  Fidelity,
  Entangled,
  GateSet,
  Depth,
};

const char* to_string(AssertionKind kind);
std::optional<AssertionKind> assertion_kind_from(std::string_view name);

// Gate-set and depth checks run on the circuit before any simulation.
bool is_structural(AssertionKind kind);

// `reg[index]`
struct RegisterIndex {
  std::string reg;
  int index = 0;

  bool operator==(const RegisterIndex&) const = default;
};

struct BitsPayload {  // output, most_frequent
  std::string bits;
  bool operator==(const BitsPayload&) const = default;
};
struct DistancePayload {  // tvd, hellinger, kl, chi2
  Distribution reference;
  ComparisonSpec comparison;
  bool operator==(const DistancePayload&) const = default;
};
struct MarginalPayload {
  RegisterIndex qubit;
  int value = 0;
  ComparisonSpec comparison;
  bool operator==(const MarginalPayload&) const = default;
};
struct ObservablePayload {
  std::vector<int> qubits;  // flat qubit indices
  ComparisonSpec comparison;
  bool operator==(const ObservablePayload&) const = default;
};
struct ValuePayload {  // entropy, fidelity
  ComparisonSpec comparison;
  bool operator==(const ValuePayload&) const = default;
};
struct CorrelationPayload {
  RegisterIndex first;
  RegisterIndex second;
  ComparisonSpec comparison;
  bool operator==(const CorrelationPayload&) const = default;
};
struct ProbabilityPayload {
  std::string bits;
  ComparisonSpec comparison;
  bool operator==(const ProbabilityPayload&) const = default;
};
struct PartitionPayload {  // entangled
  std::vector<int> qubits;
  bool operator==(const PartitionPayload&) const = default;
};
struct GateSetPayload {
  std::set<std::string> gates;
  bool operator==(const GateSetPayload&) const = default;
};
struct DepthPayload {
  int bound = 0;
  bool operator==(const DepthPayload&) const = default;
};

using AssertionPayload =
    std::variant<BitsPayload, DistancePayload, MarginalPayload, ObservablePayload, ValuePayload,
                 CorrelationPayload, ProbabilityPayload, PartitionPayload, GateSetPayload,
                 DepthPayload>;

struct AssertionDirective {
  AssertionKind kind = AssertionKind::Output;
  AssertionPayload payload;
  int line = 0;
  std::string text;  // the directive as written, without the `//%` prefix

  bool operator==(const AssertionDirective&) const = default;
};

}  // namespace qutest::pragma
