#include "qutest/pragma/directives.hpp"

#include <array>
#include <sstream>

namespace qutest::pragma {

namespace {

constexpr std::array<const char*, 15> kKindNames = {
    "output",      "tvd",         "hellinger",     "kl",       "chi2",
    "marginal",    "observable",  "entropy",       "correlation", "probability",
    "most_frequent", "fidelity",  "entangled",     "gate_set", "depth",
};

}  // namespace

const char* to_string(ConfigKey key) {
  switch (key) {
    case ConfigKey::Shots: return "shots";
    case ConfigKey::Seed: return "seed";
    case ConfigKey::Backend: return "backend";
    case ConfigKey::Runtime: return "runtime";
    case ConfigKey::RuntimeVersion: return "runtime_version";
  }
  return "?";
}

const char* to_string(Op op) {
  switch (op) {
    case Op::Less: return "<";
    case Op::LessEqual: return "<=";
    case Op::Equal: return "==";
    case Op::Greater: return ">";
    case Op::GreaterEqual: return ">=";
    case Op::NotEqual: return "!=";
    case Op::Approx: return "~=";
  }
  return "?";
}

const char* to_string(AssertionKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<AssertionKind> assertion_kind_from(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (name == kKindNames[i]) return static_cast<AssertionKind>(i);
  }
  return std::nullopt;
}

bool is_structural(AssertionKind kind) {
  return kind == AssertionKind::GateSet || kind == AssertionKind::Depth;
}

std::string to_string(const ComparisonSpec& spec) {
  std::ostringstream out;
  out.precision(10);
  out << to_string(spec.op) << ' ' << spec.threshold;
  if (spec.atol) out << " atol=" << *spec.atol;
  return out.str();
}

TestConfig collect_config(const std::vector<ConfigDirective>& directives) {
  TestConfig config;
  for (const auto& d : directives) {
    switch (d.key) {
      case ConfigKey::Shots: config.shots = d.shots; break;
      case ConfigKey::Seed: config.seed = d.seed; break;
      case ConfigKey::Backend: config.backend = d.backend; break;
      case ConfigKey::Runtime: config.runtime = d.runtime; break;
      case ConfigKey::RuntimeVersion: config.runtime_versions = d.versions; break;
    }
  }
  return config;
}

std::string to_string(const TestConfig& config) {
  std::ostringstream out;
  out << "shots=" << config.shots << " seed=";
  if (config.seed) {
    out << *config.seed;
  } else {
    out << "random";
  }
  out << " backend=" << sim::to_string(config.backend) << " runtime=" << config.runtime
      << " runtime_version=";
  if (config.runtime_versions.empty()) out << '-';
  for (std::size_t i = 0; i < config.runtime_versions.size(); ++i) {
    out << (i ? "," : "") << config.runtime_versions[i];
  }
  return out.str();
}

}  // namespace qutest::pragma
