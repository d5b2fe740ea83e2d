#pragma once

#include <Eigen/Dense>
#include <span>

#include "qutest/sim/simulator.hpp"

namespace qutest::sim {

// Reduced state over `kept` qubits: rho_A = Tr_B |psi><psi|. Row/column index
// bit j corresponds to kept[j].
struct DensityMatrix {
  Eigen::MatrixXcd matrix;

  int num_qubits() const;
};

// Throws qutest::Error unless `keep` is a non-empty strict subset of distinct
// valid qubit indices.
DensityMatrix partial_trace(const Statevector& state, std::span<const int> keep);

// -sum(lambda * log2 lambda) over eigenvalues; eigenvalues below 1e-12 count as 0.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace qutest::sim
