#pragma once

#include <cstdint>
#include <vector>

#include "qutest/distribution.hpp"
#include "qutest/sim/circuit.hpp"
#include "qutest/sim/kernels.hpp"

namespace qutest::sim {

enum class Backend { Ideal, Noisy, Hardware };

const char* to_string(Backend backend);

struct NoiseModel {
  double p1 = 1e-3;  // after each single-qubit gate
  double p2 = 1e-2;  // after each multi-qubit gate
};

struct Statevector {
  int num_qubits = 0;
  std::vector<Amplitude> amplitudes;

  double norm_squared() const;
};

enum class KernelPath { Parallel, Serial };

inline constexpr int kMaxSimulatedQubits = 26;

// Unitary of a table gate over its operands (local bit j = operand j).
std::vector<Amplitude> gate_matrix(const Operation& op);

// Applies one gate in place. Measurements are rejected.
void apply_gate(Statevector& state, const Operation& op, KernelPath path = KernelPath::Parallel);

// Final state of the measurement-free copy, starting from |0...0>.
Statevector statevector(const Circuit& circuit, KernelPath path = KernelPath::Parallel);

// Exact outcome probabilities of the classical register. Zero-probability
// outcomes are omitted. Throws if nothing is measured.
Distribution ideal_distribution(const Circuit& circuit);

struct ShotRequest {
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  Backend backend = Backend::Ideal;
  NoiseModel noise;
};

// Samples `shots` outcomes. The noisy backend runs one Pauli trajectory per
// shot: after each k-qubit gate, with probability p1 (k = 1) or p2 (k >= 2), one
// of the 4^k - 1 non-identity Paulis is applied, chosen uniformly.
Counts run_shots(const Circuit& circuit, const ShotRequest& request);

}  // namespace qutest::sim
