#include "qutest/sim/density.hpp"

#include <cmath>
#include <set>

#include "qutest/diagnostic.hpp"

namespace qutest::sim {

int DensityMatrix::num_qubits() const {
  int k = 0;
  while ((Eigen::Index{1} << k) < matrix.rows()) ++k;
  return k;
}

DensityMatrix partial_trace(const Statevector& state, std::span<const int> keep) {
  const int n = state.num_qubits;
  if (keep.empty()) throw Error("partition must name at least one qubit");
  std::set<int> unique;
  for (int q : keep) {
    if (q < 0 || q >= n) throw Error("qubit " + std::to_string(q) + " is out of range");
    if (!unique.insert(q).second) throw Error("qubit " + std::to_string(q) + " listed twice");
  }
  if (static_cast<int>(keep.size()) >= n) {
    throw Error("partition must be a strict subset of the qubits");
  }

  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (unique.count(q) == 0) traced.push_back(q);
  }
  const std::size_t dim_a = std::size_t{1} << keep.size();
  const std::size_t dim_b = std::size_t{1} << traced.size();

  // psi reshaped to a (dim_a x dim_b) matrix M; rho_A = M M^dagger.
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim_a), static_cast<Eigen::Index>(dim_b));
  for (std::size_t a = 0; a < dim_a; ++a) {
    std::size_t base = 0;
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if ((a >> j) & 1U) base |= std::size_t{1} << keep[j];
    }
    for (std::size_t b = 0; b < dim_b; ++b) {
      std::size_t index = base;
      for (std::size_t j = 0; j < traced.size(); ++j) {
        if ((b >> j) & 1U) index |= std::size_t{1} << traced[j];
      }
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = state.amplitudes[index];
    }
  }
  return DensityMatrix{m * m.adjoint()};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue decomposition failed");
  double s = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda < 1e-12) continue;
    s -= lambda * std::log2(lambda);
  }
  return s < 0.0 ? 0.0 : s;
}

}  // namespace qutest::sim
