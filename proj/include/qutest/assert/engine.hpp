#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qutest/distribution.hpp"
#include "qutest/pragma/directives.hpp"
#include "qutest/sim/circuit.hpp"
#include "qutest/sim/simulator.hpp"

namespace qutest::assertion {

enum class Status { Pass, Fail, Error };

const char* to_string(Status status);

struct AssertionResult {
  Status status = Status::Pass;
  pragma::AssertionKind kind = pragma::AssertionKind::Output;
  std::optional<double> actual;  // numeric actual value, when there is one
  std::string actual_text;       // printable actual value
  std::string expected;          // printable expectation
  std::string message;
  int line = 0;

  bool passed() const { return status == Status::Pass; }
};

// Applies `spec` to `actual`. A NaN actual throws qutest::Error.
bool compare(double actual, const pragma::ComparisonSpec& spec);

// "0.0123", "inf", "1e-07"
std::string format_value(double v);

// Each evaluator reports a precondition violation as a Status::Error result
// rather than throwing.

AssertionResult eval_output(const Counts& counts, const std::string& bits);
AssertionResult eval_tvd(const Counts& counts, const Distribution& reference,
                         const pragma::ComparisonSpec& spec);
AssertionResult eval_hellinger(const Counts& counts, const Distribution& reference,
                               const pragma::ComparisonSpec& spec);
AssertionResult eval_kl(const Counts& counts, const Distribution& reference,
                        const pragma::ComparisonSpec& spec);
// Compares the chi-squared p-value against `spec`.
AssertionResult eval_chi2(const Counts& counts, const Distribution& reference,
                          const pragma::ComparisonSpec& spec);
// Frequency with which the bit holding flat qubit `qubit` reads `value`.
AssertionResult eval_marginal(const Counts& counts, const std::map<int, int>& measurement_map,
                              int qubit, int value, const pragma::ComparisonSpec& spec);
// Sample estimate of <Z...Z> over the listed flat qubits.
AssertionResult eval_observable(const Counts& counts, const std::map<int, int>& measurement_map,
                                const std::vector<int>& qubits,
                                const pragma::ComparisonSpec& spec);
AssertionResult eval_entropy(const Counts& counts, const pragma::ComparisonSpec& spec);
// Pearson correlation of classical bits `i` and `j` over the shots.
AssertionResult eval_correlation(const Counts& counts, int i, int j,
                                 const pragma::ComparisonSpec& spec);
AssertionResult eval_probability(const Counts& counts, const std::string& bits,
                                 const pragma::ComparisonSpec& spec);
// Ties go to the lexicographically smallest outcome.
AssertionResult eval_most_frequent(const Counts& counts, const std::string& bits);
AssertionResult eval_fidelity(const Counts& counts, const Distribution& ideal,
                              const pragma::ComparisonSpec& spec);
// Passes iff the entanglement entropy of `partition` exceeds kEntangledThreshold bits.
AssertionResult eval_entangled(const sim::Statevector& state, const std::vector<int>& partition);
AssertionResult eval_gate_set(const sim::Circuit& circuit, const std::set<std::string>& allowed);
AssertionResult eval_depth(const sim::Circuit& circuit, int bound);

inline constexpr double kEntangledThreshold = 1e-6;

// What a test run has produced so far. Pointers are null when the phase that
// computes them did not run.
struct EvaluationInputs {
  const sim::Circuit* circuit = nullptr;
  const Counts* counts = nullptr;
  const sim::Statevector* state = nullptr;
  const Distribution* ideal = nullptr;
};

AssertionResult evaluate(const pragma::AssertionDirective& directive,
                         const EvaluationInputs& inputs);

}  // namespace qutest::assertion
