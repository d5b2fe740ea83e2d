#include "qutest/assert/engine.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "qutest/assert/metrics.hpp"
#include "qutest/diagnostic.hpp"
#include "qutest/sim/density.hpp"

namespace qutest::assertion {

using pragma::AssertionKind;
using pragma::ComparisonSpec;
using pragma::Op;

namespace {

AssertionResult error_result(AssertionKind kind, std::string message) {
  AssertionResult r;
  r.status = Status::Error;
  r.kind = kind;
  r.message = std::move(message);
  return r;
}

// Numeric check: actual against a comparison spec.
AssertionResult numeric_result(AssertionKind kind, const std::string& label, double actual,
                               const ComparisonSpec& spec) {
  AssertionResult r;
  r.kind = kind;
  r.actual = actual;
  r.actual_text = format_value(actual);
  r.expected = pragma::to_string(spec);
  if (std::isnan(actual)) {
    r.status = Status::Error;
    r.message = label + " is undefined (NaN)";
    return r;
  }
  r.status = compare(actual, spec) ? Status::Pass : Status::Fail;
  r.message = label + " = " + r.actual_text + " (expected " + r.expected + ")";
  return r;
}

std::optional<AssertionResult> check_counts(AssertionKind kind, const Counts& counts) {
  if (counts.shots == 0 || counts.entries.empty()) {
    return error_result(kind, "no shots were recorded");
  }
  return std::nullopt;
}

std::optional<AssertionResult> check_reference(AssertionKind kind, const Counts& counts,
                                               const Distribution& reference) {
  if (auto e = check_counts(kind, counts)) return e;
  if (reference.entries.empty()) return error_result(kind, "reference distribution is empty");
  if (reference.width() != counts.width) {
    return error_result(kind, "reference outcomes have " + std::to_string(reference.width()) +
                                  " bits but the circuit measures " +
                                  std::to_string(counts.width));
  }
  return std::nullopt;
}

std::optional<int> measured_bit(const std::map<int, int>& measurement_map, int qubit) {
  auto it = measurement_map.find(qubit);
  if (it == measurement_map.end()) return std::nullopt;
  return it->second;
}

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "?";
}

bool compare(double actual, const ComparisonSpec& spec) {
  if (std::isnan(actual)) throw Error("cannot compare an undefined (NaN) value");
  const double t = spec.threshold;
  switch (spec.op) {
    case Op::Less: return actual < t;
    case Op::LessEqual: return actual <= t;
    case Op::Equal: return actual == t;
    case Op::Greater: return actual > t;
    case Op::GreaterEqual: return actual >= t;
    case Op::NotEqual: return actual != t;
    case Op::Approx: return std::abs(actual - t) <= spec.atol.value_or(0.0);
  }
  return false;
}

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

AssertionResult eval_output(const Counts& counts, const std::string& bits) {
  const auto kind = AssertionKind::Output;
  if (auto e = check_counts(kind, counts)) return *e;
  if (static_cast<int>(bits.size()) != counts.width) {
    return error_result(kind, "expected outcome has " + std::to_string(bits.size()) +
                                  " bits but the circuit measures " +
                                  std::to_string(counts.width));
  }
  AssertionResult r;
  r.kind = kind;
  r.expected = bits;
  const bool single = counts.entries.size() == 1;
  r.actual_text = single ? counts.entries.begin()->first : to_string(counts);
  if (single && counts.entries.begin()->first == bits) {
    r.status = Status::Pass;
    r.message = "every shot gave " + bits;
  } else {
    r.status = Status::Fail;
    r.message = "expected every shot to give " + bits + ", got " + r.actual_text;
  }
  return r;
}

AssertionResult eval_tvd(const Counts& counts, const Distribution& reference,
                         const ComparisonSpec& spec) {
  if (auto e = check_reference(AssertionKind::Tvd, counts, reference)) return *e;
  return numeric_result(AssertionKind::Tvd, "tvd",
                        total_variation(counts.to_distribution(), reference), spec);
}

AssertionResult eval_hellinger(const Counts& counts, const Distribution& reference,
                               const ComparisonSpec& spec) {
  if (auto e = check_reference(AssertionKind::Hellinger, counts, reference)) return *e;
  return numeric_result(AssertionKind::Hellinger, "hellinger",
                        hellinger(counts.to_distribution(), reference), spec);
}

AssertionResult eval_kl(const Counts& counts, const Distribution& reference,
                        const ComparisonSpec& spec) {
  if (auto e = check_reference(AssertionKind::Kl, counts, reference)) return *e;
  return numeric_result(AssertionKind::Kl, "kl",
                        kl_divergence(counts.to_distribution(), reference), spec);
}

AssertionResult eval_chi2(const Counts& counts, const Distribution& reference,
                          const ComparisonSpec& spec) {
  const auto kind = AssertionKind::Chi2;
  if (auto e = check_reference(kind, counts, reference)) return *e;
  ChiSquaredTest test;
  try {
    test = chi_squared_test(counts, reference);
  } catch (const Error& e) {
    return error_result(kind, e.what());
  }
  auto r = numeric_result(kind, "chi2 p-value", test.p_value, spec);
  std::ostringstream extra;
  extra << " [statistic " << format_value(test.statistic) << ", dof " << test.dof;
  if (!test.unexpected.empty()) {
    extra << ", unexpected outcomes:";
    for (const auto& k : test.unexpected) extra << ' ' << k;
  }
  extra << ']';
  r.message += extra.str();
  return r;
}

AssertionResult eval_marginal(const Counts& counts, const std::map<int, int>& measurement_map,
                              int qubit, int value, const ComparisonSpec& spec) {
  const auto kind = AssertionKind::Marginal;
  if (auto e = check_counts(kind, counts)) return *e;
  const auto bit = measured_bit(measurement_map, qubit);
  if (!bit) return error_result(kind, "qubit " + std::to_string(qubit) + " is not measured");
  if (value != 0 && value != 1) return error_result(kind, "marginal value must be 0 or 1");
  std::uint64_t hits = 0;
  for (const auto& [k, n] : counts.entries) {
    if (bit_at(k, *bit) == value) hits += n;
  }
  const double f = static_cast<double>(hits) / static_cast<double>(counts.shots);
  return numeric_result(kind, "P(qubit " + std::to_string(qubit) + " = " + std::to_string(value) + ")",
                        f, spec);
}

AssertionResult eval_observable(const Counts& counts, const std::map<int, int>& measurement_map,
                                const std::vector<int>& qubits, const ComparisonSpec& spec) {
  const auto kind = AssertionKind::Observable;
  if (auto e = check_counts(kind, counts)) return *e;
  if (qubits.empty()) return error_result(kind, "observable needs at least one qubit");
  std::vector<int> bits;
  for (int q : qubits) {
    const auto bit = measured_bit(measurement_map, q);
    if (!bit) return error_result(kind, "qubit " + std::to_string(q) + " is not measured");
    bits.push_back(*bit);
  }
  std::uint64_t odd = 0;
  for (const auto& [k, n] : counts.entries) {
    int parity = 0;
    for (int b : bits) parity ^= bit_at(k, b);
    if (parity) odd += n;
  }
  const double value = 1.0 - 2.0 * (static_cast<double>(odd) / static_cast<double>(counts.shots));
  std::string label = "<";
  for (std::size_t i = 0; i < qubits.size(); ++i) label += "Z" + std::to_string(qubits[i]);
  label += ">";
  return numeric_result(kind, label, value, spec);
}

AssertionResult eval_entropy(const Counts& counts, const ComparisonSpec& spec) {
  if (auto e = check_counts(AssertionKind::Entropy, counts)) return *e;
  return numeric_result(AssertionKind::Entropy, "entropy",
                        shannon_entropy(counts.to_distribution()), spec);
}

AssertionResult eval_correlation(const Counts& counts, int i, int j, const ComparisonSpec& spec) {
  const auto kind = AssertionKind::Correlation;
  if (auto e = check_counts(kind, counts)) return *e;
  if (i == j) return error_result(kind, "correlation needs two distinct bits");
  if (i < 0 || j < 0 || i >= counts.width || j >= counts.width) {
    return error_result(kind, "bit index out of range for a " + std::to_string(counts.width) +
                                  "-bit register");
  }
  using Wide = __int128;
  Wide ni = 0, nj = 0, nij = 0;
  for (const auto& [k, n] : counts.entries) {
    const int a = bit_at(k, i), b = bit_at(k, j);
    if (a) ni += n;
    if (b) nj += n;
    if (a && b) nij += n;
  }
  const Wide total = counts.shots;
  const Wide cov = total * nij - ni * nj;
  const Wide vi = total * ni - ni * ni;
  const Wide vj = total * nj - nj * nj;
  if (vi == 0 || vj == 0) {
    return error_result(kind, "bit " + std::to_string(vi == 0 ? i : j) +
                                  " never varies, so its correlation is undefined");
  }
  long double corr;
  if (vi == vj) {
    corr = static_cast<long double>(cov) / static_cast<long double>(vi);
  } else {
    corr = static_cast<long double>(cov) /
           std::sqrt(static_cast<long double>(vi) * static_cast<long double>(vj));
  }
  return numeric_result(kind, "corr(bit " + std::to_string(i) + ", bit " + std::to_string(j) + ")",
                        static_cast<double>(corr), spec);
}

AssertionResult eval_probability(const Counts& counts, const std::string& bits,
                                 const ComparisonSpec& spec) {
  const auto kind = AssertionKind::Probability;
  if (auto e = check_counts(kind, counts)) return *e;
  if (static_cast<int>(bits.size()) != counts.width) {
    return error_result(kind, "outcome " + bits + " has " + std::to_string(bits.size()) +
                                  " bits but the circuit measures " +
                                  std::to_string(counts.width));
  }
  return numeric_result(kind, "P(" + bits + ")", counts.frequency(bits), spec);
}

AssertionResult eval_most_frequent(const Counts& counts, const std::string& bits) {
  const auto kind = AssertionKind::MostFrequent;
  if (auto e = check_counts(kind, counts)) return *e;
  if (static_cast<int>(bits.size()) != counts.width) {
    return error_result(kind, "expected outcome has " + std::to_string(bits.size()) +
                                  " bits but the circuit measures " +
                                  std::to_string(counts.width));
  }
  // std::map iterates keys in lexicographic order, so the first maximum wins ties.
  auto best = counts.entries.begin();
  for (auto it = counts.entries.begin(); it != counts.entries.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  AssertionResult r;
  r.kind = kind;
  r.expected = bits;
  r.actual_text = best->first;
  r.status = best->first == bits ? Status::Pass : Status::Fail;
  r.message = "most frequent outcome " + best->first + " (" + std::to_string(best->second) + "/" +
              std::to_string(counts.shots) + " shots), expected " + bits;
  return r;
}

AssertionResult eval_fidelity(const Counts& counts, const Distribution& ideal,
                              const ComparisonSpec& spec) {
  if (auto e = check_reference(AssertionKind::Fidelity, counts, ideal)) return *e;
  return numeric_result(AssertionKind::Fidelity, "fidelity",
                        classical_fidelity(counts.to_distribution(), ideal), spec);
}

AssertionResult eval_entangled(const sim::Statevector& state, const std::vector<int>& partition) {
  const auto kind = AssertionKind::Entangled;
  double s = 0.0;
  try {
    s = sim::von_neumann_entropy(sim::partial_trace(state, partition));
  } catch (const Error& e) {
    return error_result(kind, e.what());
  }
  AssertionResult r;
  r.kind = kind;
  r.actual = s;
  r.actual_text = format_value(s);
  r.expected = "> " + format_value(kEntangledThreshold);
  r.status = s > kEntangledThreshold ? Status::Pass : Status::Fail;
  r.message = "entanglement entropy = " + r.actual_text + " bits (expected " + r.expected + ")";
  return r;
}

AssertionResult eval_gate_set(const sim::Circuit& circuit, const std::set<std::string>& allowed) {
  std::map<std::string, int> violations;
  for (const auto& op : circuit.ops) {
    if (!allowed.count(op.name)) ++violations[op.name];
  }
  AssertionResult r;
  r.kind = AssertionKind::GateSet;
  std::string expected;
  for (const auto& g : allowed) expected += (expected.empty() ? "" : ", ") + g;
  r.expected = "{" + expected + "}";
  if (violations.empty()) {
    r.status = Status::Pass;
    r.message = "every operation is in " + r.expected;
    return r;
  }
  std::string found;
  for (const auto& [name, n] : violations) {
    found += (found.empty() ? "" : ", ") + name + " x" + std::to_string(n);
  }
  r.status = Status::Fail;
  r.actual_text = found;
  r.message = "operations outside " + r.expected + ": " + found;
  return r;
}

AssertionResult eval_depth(const sim::Circuit& circuit, int bound) {
  const int d = depth(circuit);
  AssertionResult r;
  r.kind = AssertionKind::Depth;
  r.actual = d;
  r.actual_text = std::to_string(d);
  r.expected = "<= " + std::to_string(bound);
  r.status = d <= bound ? Status::Pass : Status::Fail;
  r.message = "depth = " + r.actual_text + " (expected " + r.expected + ")";
  return r;
}

namespace {

AssertionResult dispatch(const pragma::AssertionDirective& d, const EvaluationInputs& in) {
  const auto kind = d.kind;
  const auto missing = [&](const char* what) {
    return error_result(kind, std::string(what) + " is not available for this assertion");
  };
  if (pragma::is_structural(kind) && !in.circuit) return missing("the circuit");

  switch (kind) {
    case AssertionKind::GateSet:
      return eval_gate_set(*in.circuit, std::get<pragma::GateSetPayload>(d.payload).gates);
    case AssertionKind::Depth:
      return eval_depth(*in.circuit, std::get<pragma::DepthPayload>(d.payload).bound);
    case AssertionKind::Entangled:
      if (!in.state) return missing("the statevector");
      return eval_entangled(*in.state, std::get<pragma::PartitionPayload>(d.payload).qubits);
    default:
      break;
  }

  if (!in.counts) return missing("shot data");
  const Counts& counts = *in.counts;
  switch (kind) {
    case AssertionKind::Output:
      return eval_output(counts, std::get<pragma::BitsPayload>(d.payload).bits);
    case AssertionKind::MostFrequent:
      return eval_most_frequent(counts, std::get<pragma::BitsPayload>(d.payload).bits);
    case AssertionKind::Tvd:
    case AssertionKind::Hellinger:
    case AssertionKind::Kl:
    case AssertionKind::Chi2: {
      const auto& p = std::get<pragma::DistancePayload>(d.payload);
      if (kind == AssertionKind::Tvd) return eval_tvd(counts, p.reference, p.comparison);
      if (kind == AssertionKind::Hellinger) return eval_hellinger(counts, p.reference, p.comparison);
      if (kind == AssertionKind::Kl) return eval_kl(counts, p.reference, p.comparison);
      return eval_chi2(counts, p.reference, p.comparison);
    }
    case AssertionKind::Marginal: {
      const auto& p = std::get<pragma::MarginalPayload>(d.payload);
      if (!in.circuit) return missing("the circuit");
      const auto q = in.circuit->qubit_index(p.qubit.reg, p.qubit.index);
      if (!q) {
        return error_result(kind, "no qubit " + p.qubit.reg + "[" +
                                      std::to_string(p.qubit.index) + "] in this test");
      }
      return eval_marginal(counts, in.circuit->measurement_map, *q, p.value, p.comparison);
    }
    case AssertionKind::Observable: {
      const auto& p = std::get<pragma::ObservablePayload>(d.payload);
      if (!in.circuit) return missing("the circuit");
      return eval_observable(counts, in.circuit->measurement_map, p.qubits, p.comparison);
    }
    case AssertionKind::Entropy:
      return eval_entropy(counts, std::get<pragma::ValuePayload>(d.payload).comparison);
    case AssertionKind::Correlation: {
      const auto& p = std::get<pragma::CorrelationPayload>(d.payload);
      if (!in.circuit) return missing("the circuit");
      const auto i = in.circuit->bit_index(p.first.reg, p.first.index);
      const auto j = in.circuit->bit_index(p.second.reg, p.second.index);
      if (!i || !j) {
        const auto& bad = i ? p.second : p.first;
        return error_result(kind, "no classical bit " + bad.reg + "[" +
                                      std::to_string(bad.index) + "] in this test");
      }
      return eval_correlation(counts, *i, *j, p.comparison);
    }
    case AssertionKind::Probability: {
      const auto& p = std::get<pragma::ProbabilityPayload>(d.payload);
      return eval_probability(counts, p.bits, p.comparison);
    }
    case AssertionKind::Fidelity:
      if (!in.ideal) return missing("the ideal distribution");
      return eval_fidelity(counts, *in.ideal, std::get<pragma::ValuePayload>(d.payload).comparison);
    default:
      break;
  }
  return error_result(kind, "unhandled assertion kind");
}

}  // namespace

AssertionResult evaluate(const pragma::AssertionDirective& directive,
                         const EvaluationInputs& inputs) {
  AssertionResult r;
  try {
    r = dispatch(directive, inputs);
  } catch (const std::exception& e) {
    r = error_result(directive.kind, e.what());
  }
  r.kind = directive.kind;
  r.line = directive.line;
  return r;
}

}  // namespace qutest::assertion
