#include <cassert>
#include <vector>

#include "qutest/sim/kernels.hpp"

namespace qutest::sim::kernels::serial {

void apply_1q(std::span<Amplitude> state, const Matrix2& m, int target) {
  const std::size_t mask = std::size_t{1} << target;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if ((i & mask) != 0) continue;
    const Amplitude a0 = state[i];
    const Amplitude a1 = state[i | mask];
    state[i] = m[0] * a0 + m[1] * a1;
    state[i | mask] = m[2] * a0 + m[3] * a1;
  }
}

void apply_matrix(std::span<Amplitude> state, std::span<const Amplitude> matrix,
                  std::span<const int> qubits) {
  const std::size_t k = qubits.size();
  const std::size_t dim = std::size_t{1} << k;
  assert(matrix.size() == dim * dim);

  std::size_t target_mask = 0;
  std::vector<std::size_t> offsets(dim, 0);
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((l >> j) & 1U) offsets[l] |= std::size_t{1} << qubits[j];
    }
  }
  for (int q : qubits) target_mask |= std::size_t{1} << q;

  std::vector<Amplitude> in(dim);
  for (std::size_t base = 0; base < state.size(); ++base) {
    if ((base & target_mask) != 0) continue;
    for (std::size_t l = 0; l < dim; ++l) in[l] = state[base | offsets[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      Amplitude acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += matrix[r * dim + c] * in[c];
      state[base | offsets[r]] = acc;
    }
  }
}

void probabilities(std::span<const Amplitude> state, std::span<double> out) {
  for (std::size_t i = 0; i < state.size(); ++i) out[i] = std::norm(state[i]);
}

double norm_squared(std::span<const Amplitude> state) {
  double sum = 0.0;
  for (const auto& a : state) sum += std::norm(a);
  return sum;
}

}  // namespace qutest::sim::kernels::serial
