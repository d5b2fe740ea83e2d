#include "qutest/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <unordered_map>

#include "qutest/diagnostic.hpp"
#include "qutest/sim/gates.hpp"
#include "qutest/sim/rng.hpp"

namespace qutest::sim {

namespace {

using namespace std::complex_literals;

constexpr double kZeroProbability = 1e-14;
constexpr std::size_t kTrajectoryCacheLimit = 4096;

const Matrix2 kPauliX{0.0, 1.0, 1.0, 0.0};
const Matrix2 kPauliY{0.0, -1.0i, 1.0i, 0.0};
const Matrix2 kPauliZ{1.0, 0.0, 0.0, -1.0};

Matrix2 single_qubit_matrix(const Operation& op) {
  const auto& a = op.angles;
  const double r = 1.0 / std::numbers::sqrt2;
  const std::string& n = op.name;
  if (n == "h") return {r, r, r, -r};
  if (n == "x") return kPauliX;
  if (n == "y") return kPauliY;
  if (n == "z") return kPauliZ;
  if (n == "s") return {1.0, 0.0, 0.0, 1.0i};
  if (n == "sdg") return {1.0, 0.0, 0.0, -1.0i};
  if (n == "t") return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
  if (n == "tdg") return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
  if (n == "sx") return {0.5 + 0.5i, 0.5 - 0.5i, 0.5 - 0.5i, 0.5 + 0.5i};
  if (n == "rx") {
    const double c = std::cos(a[0] / 2), s = std::sin(a[0] / 2);
    return {c, -1.0i * s, -1.0i * s, c};
  }
  if (n == "ry") {
    const double c = std::cos(a[0] / 2), s = std::sin(a[0] / 2);
    return {c, -s, s, c};
  }
  if (n == "rz") return {std::polar(1.0, -a[0] / 2), 0.0, 0.0, std::polar(1.0, a[0] / 2)};
  if (n == "p") return {1.0, 0.0, 0.0, std::polar(1.0, a[0])};
  if (n == "u") {
    const double c = std::cos(a[0] / 2), s = std::sin(a[0] / 2);
    return {c, -std::polar(s, a[2]), std::polar(s, a[1]), std::polar(c, a[1] + a[2])};
  }
  throw Error("unknown single-qubit gate '" + n + "'");
}

void validate(const Operation& op, int num_qubits) {
  const GateSpec* spec = find_gate(op.name);
  if (spec == nullptr) throw Error("unknown gate '" + op.name + "'");
  if (static_cast<int>(op.qubits.size()) != spec->qubits ||
      static_cast<int>(op.angles.size()) != spec->angles) {
    throw Error("gate '" + op.name + "' has the wrong number of operands");
  }
  for (int q : op.qubits) {
    if (q < 0 || q >= num_qubits) throw Error("qubit index out of range in '" + describe(op) + "'");
  }
}

void apply_pauli(Statevector& state, int qubit, unsigned code, KernelPath path) {
  const Matrix2* m = nullptr;
  switch (code) {
    case 1: m = &kPauliX; break;
    case 2: m = &kPauliY; break;
    case 3: m = &kPauliZ; break;
    default: return;
  }
  if (path == KernelPath::Serial) {
    kernels::serial::apply_1q(state.amplitudes, *m, qubit);
  } else {
    kernels::parallel::apply_1q(state.amplitudes, *m, qubit);
  }
}

Statevector zero_state(int num_qubits) {
  if (num_qubits > kMaxSimulatedQubits) {
    throw Error("circuit uses " + std::to_string(num_qubits) + " qubits; at most " +
                std::to_string(kMaxSimulatedQubits) + " can be simulated");
  }
  Statevector s;
  s.num_qubits = num_qubits;
  s.amplitudes.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  s.amplitudes[0] = 1.0;
  return s;
}

// Classical outcome (bit c of the result = classical bit c) per basis state.
std::vector<std::uint64_t> outcome_table(const Circuit& circuit) {
  std::vector<std::uint64_t> table(std::size_t{1} << circuit.num_qubits, 0);
  for (std::size_t b = 0; b < table.size(); ++b) {
    std::uint64_t v = 0;
    for (const auto& [q, c] : circuit.measurement_map) {
      if ((b >> q) & 1U) v |= std::uint64_t{1} << c;
    }
    table[b] = v;
  }
  return table;
}

std::string to_bitstring(std::uint64_t value, int width) {
  std::string key(static_cast<std::size_t>(width), '0');
  for (int c = 0; c < width; ++c) {
    if ((value >> c) & 1U) key[static_cast<std::size_t>(width - 1 - c)] = '1';
  }
  return key;
}

// Outcome -> probability, ordered by outcome value.
std::map<std::uint64_t, double> outcome_probabilities(const Statevector& state,
                                                      const std::vector<std::uint64_t>& table) {
  std::vector<double> probs(state.amplitudes.size());
  kernels::parallel::probabilities(state.amplitudes, probs);
  std::map<std::uint64_t, double> acc;
  for (std::size_t b = 0; b < probs.size(); ++b) {
    if (probs[b] == 0.0) continue;
    acc[table[b]] += probs[b];
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second < kZeroProbability; });
  return acc;
}

class SampleTable {
 public:
  explicit SampleTable(const std::map<std::uint64_t, double>& probs) {
    double running = 0.0;
    for (const auto& [outcome, p] : probs) {
      running += p;
      outcomes_.push_back(outcome);
      cumulative_.push_back(running);
    }
  }

  std::uint64_t sample(double u) const {
    const double target = u * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) --it;
    return outcomes_[static_cast<std::size_t>(it - cumulative_.begin())];
  }

 private:
  std::vector<std::uint64_t> outcomes_;
  std::vector<double> cumulative_;
};

void check_classical(const Circuit& circuit) {
  if (!circuit.has_measurements()) throw Error("nothing measured");
  if (circuit.classical_width > 63) throw Error("more than 63 classical bits are not supported");
}

}  // namespace

const char* to_string(Backend backend) {
  switch (backend) {
    case Backend::Ideal: return "ideal";
    case Backend::Noisy: return "noisy";
    case Backend::Hardware: return "hardware";
  }
  return "?";
}

double Statevector::norm_squared() const { return kernels::parallel::norm_squared(amplitudes); }

std::vector<Amplitude> gate_matrix(const Operation& op) {
  const GateSpec* spec = find_gate(op.name);
  if (spec == nullptr) throw Error("unknown gate '" + op.name + "'");
  if (spec->qubits == 1) {
    Matrix2 m = single_qubit_matrix(op);
    return {m.begin(), m.end()};
  }
  const std::size_t dim = std::size_t{1} << spec->qubits;
  std::vector<Amplitude> m(dim * dim, Amplitude{0.0, 0.0});
  auto set = [&](std::size_t row, std::size_t col, Amplitude v) { m[row * dim + col] = v; };
  // Local index: bit j is operand j, e.g. cx(control, target) -> control + 2*target.
  if (op.name == "cx") {
    set(0, 0, 1.0);
    set(2, 2, 1.0);
    set(3, 1, 1.0);
    set(1, 3, 1.0);
  } else if (op.name == "cz") {
    set(0, 0, 1.0);
    set(1, 1, 1.0);
    set(2, 2, 1.0);
    set(3, 3, -1.0);
  } else if (op.name == "cp") {
    set(0, 0, 1.0);
    set(1, 1, 1.0);
    set(2, 2, 1.0);
    set(3, 3, std::polar(1.0, op.angles.at(0)));
  } else if (op.name == "swap") {
    set(0, 0, 1.0);
    set(2, 1, 1.0);
    set(1, 2, 1.0);
    set(3, 3, 1.0);
  } else if (op.name == "ccx") {
    for (std::size_t l = 0; l < dim; ++l) {
      const std::size_t target = (l & 3U) == 3U ? (l ^ 4U) : l;
      set(target, l, 1.0);
    }
  } else {
    throw Error("unknown gate '" + op.name + "'");
  }
  return m;
}

void apply_gate(Statevector& state, const Operation& op, KernelPath path) {
  if (op.is_measurement()) throw Error("apply_gate called with a measurement");
  validate(op, state.num_qubits);
  if (op.qubits.size() == 1) {
    const Matrix2 m = single_qubit_matrix(op);
    if (path == KernelPath::Serial) {
      kernels::serial::apply_1q(state.amplitudes, m, op.qubits[0]);
    } else {
      kernels::parallel::apply_1q(state.amplitudes, m, op.qubits[0]);
    }
    return;
  }
  const auto m = gate_matrix(op);
  if (path == KernelPath::Serial) {
    kernels::serial::apply_matrix(state.amplitudes, m, op.qubits);
  } else {
    kernels::parallel::apply_matrix(state.amplitudes, m, op.qubits);
  }
}

Statevector statevector(const Circuit& circuit, KernelPath path) {
  Statevector state = zero_state(circuit.num_qubits);
  for (const auto& op : circuit.ops) {
    if (op.is_measurement()) continue;
    apply_gate(state, op, path);
  }
  return state;
}

Distribution ideal_distribution(const Circuit& circuit) {
  check_classical(circuit);
  const Statevector state = statevector(circuit);
  Distribution dist;
  for (const auto& [outcome, p] : outcome_probabilities(state, outcome_table(circuit))) {
    dist.entries.emplace(to_bitstring(outcome, circuit.classical_width), p);
  }
  return dist;
}

Counts run_shots(const Circuit& circuit, const ShotRequest& request) {
  if (request.backend == Backend::Hardware) {
    throw Error("hardware backend reserved for future integration; use ideal or noisy");
  }
  if (request.shots == 0) throw Error("shots must be at least 1");
  check_classical(circuit);
  require_terminal_measurements(circuit);

  const auto table = outcome_table(circuit);
  const SampleTable ideal(outcome_probabilities(statevector(circuit), table));
  Rng rng(request.seed);
  std::map<std::uint64_t, std::uint64_t> tally;

  if (request.backend == Backend::Ideal) {
    for (std::uint64_t s = 0; s < request.shots; ++s) ++tally[ideal.sample(rng.uniform())];
  } else {
    std::vector<std::size_t> gate_ops;
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
      if (!circuit.ops[i].is_measurement()) gate_ops.push_back(i);
    }
    // Error pattern: (operation index, Pauli code), code digit j acts on operand j.
    using Pattern = std::vector<std::pair<std::size_t, unsigned>>;
    std::map<Pattern, SampleTable> cache;
    Pattern pattern;

    for (std::uint64_t s = 0; s < request.shots; ++s) {
      pattern.clear();
      for (std::size_t i : gate_ops) {
        const std::size_t k = circuit.ops[i].qubits.size();
        const double p = k == 1 ? request.noise.p1 : request.noise.p2;
        if (rng.uniform() < p) {
          const std::uint64_t paulis = (std::uint64_t{1} << (2 * k)) - 1;
          pattern.emplace_back(i, static_cast<unsigned>(1 + rng.below(paulis)));
        }
      }
      if (pattern.empty()) {
        ++tally[ideal.sample(rng.uniform())];
        continue;
      }
      auto it = cache.find(pattern);
      if (it == cache.end()) {
        Statevector state = zero_state(circuit.num_qubits);
        std::size_t next = 0;
        for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
          const auto& op = circuit.ops[i];
          if (op.is_measurement()) continue;
          apply_gate(state, op);
          for (; next < pattern.size() && pattern[next].first == i; ++next) {
            const unsigned code = pattern[next].second;
            for (std::size_t j = 0; j < op.qubits.size(); ++j) {
              apply_pauli(state, op.qubits[j], (code >> (2 * j)) & 3U, KernelPath::Parallel);
            }
          }
        }
        SampleTable t(outcome_probabilities(state, table));
        if (cache.size() < kTrajectoryCacheLimit) {
          it = cache.emplace(pattern, std::move(t)).first;
        } else {
          ++tally[t.sample(rng.uniform())];
          continue;
        }
      }
      ++tally[it->second.sample(rng.uniform())];
    }
  }

  Counts counts;
  counts.shots = request.shots;
  counts.width = circuit.classical_width;
  for (const auto& [outcome, n] : tally) {
    counts.entries.emplace(to_bitstring(outcome, circuit.classical_width), n);
  }
  return counts;
}

}  // namespace qutest::sim
