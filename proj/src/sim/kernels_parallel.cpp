#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>

#include "qutest/sim/kernels.hpp"

namespace qutest::sim::kernels::parallel {

namespace {

// Inserts a zero bit at each position in `sorted_positions` (ascending).
inline std::size_t insert_zero_bits(std::size_t i, const int* sorted_positions, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t low = (std::size_t{1} << sorted_positions[j]) - 1;
    i = ((i & ~low) << 1) | (i & low);
  }
  return i;
}

constexpr std::size_t kMaxQubits = 3;

}  // namespace

void apply_1q(std::span<Amplitude> state, const Matrix2& m, int target) {
  const std::size_t mask = std::size_t{1} << target;
  const std::size_t low = mask - 1;
  const auto pairs = static_cast<std::int64_t>(state.size() / 2);
  Amplitude* data = state.data();
  // Matrix entries go in as private scalars so the loop body stays in registers.
  const double ar = m[0].real(), ai = m[0].imag(), br = m[1].real(), bi = m[1].imag();
  const double cr = m[2].real(), ci = m[2].imag(), dr = m[3].real(), di = m[3].imag();

#pragma omp parallel for if (static_cast<std::size_t>(pairs) >= kParallelThreshold) schedule(static) \
    firstprivate(ar, ai, br, bi, cr, ci, dr, di, mask, low)
  for (std::int64_t g = 0; g < pairs; ++g) {
    const auto ug = static_cast<std::size_t>(g);
    const std::size_t i0 = ((ug & ~low) << 1) | (ug & low);
    const std::size_t i1 = i0 | mask;
    const double xr = data[i0].real(), xi = data[i0].imag();
    const double yr = data[i1].real(), yi = data[i1].imag();
    data[i0] = {ar * xr - ai * xi + br * yr - bi * yi, ar * xi + ai * xr + br * yi + bi * yr};
    data[i1] = {cr * xr - ci * xi + dr * yr - di * yi, cr * xi + ci * xr + dr * yi + di * yr};
  }
}

void apply_matrix(std::span<Amplitude> state, std::span<const Amplitude> matrix,
                  std::span<const int> qubits) {
  const std::size_t k = qubits.size();
  assert(k >= 1 && k <= kMaxQubits);
  const std::size_t dim = std::size_t{1} << k;
  assert(matrix.size() == dim * dim);

  std::array<int, kMaxQubits> sorted{};
  std::copy(qubits.begin(), qubits.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k));

  std::array<std::size_t, std::size_t{1} << kMaxQubits> offsets{};
  for (std::size_t l = 0; l < dim; ++l) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((l >> j) & 1U) offsets[l] |= std::size_t{1} << qubits[j];
    }
  }

  const auto groups = static_cast<std::int64_t>(state.size() >> k);
  Amplitude* data = state.data();
  const Amplitude* mat = matrix.data();

#pragma omp parallel for if (static_cast<std::size_t>(groups) >= kParallelThreshold) schedule(static) \
    firstprivate(sorted, offsets, k, dim)
  for (std::int64_t g = 0; g < groups; ++g) {
    const std::size_t base = insert_zero_bits(static_cast<std::size_t>(g), sorted.data(), k);
    std::array<Amplitude, std::size_t{1} << kMaxQubits> in{};
    for (std::size_t l = 0; l < dim; ++l) in[l] = data[base | offsets[l]];
    for (std::size_t r = 0; r < dim; ++r) {
      Amplitude acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) acc += mat[r * dim + c] * in[c];
      data[base | offsets[r]] = acc;
    }
  }
}

void probabilities(std::span<const Amplitude> state, std::span<double> out) {
  const auto n = static_cast<std::int64_t>(state.size());
  const Amplitude* data = state.data();
  double* dst = out.data();
#pragma omp parallel for if (static_cast<std::size_t>(n) >= kParallelThreshold) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) dst[i] = std::norm(data[i]);
}

double norm_squared(std::span<const Amplitude> state) {
  const auto n = static_cast<std::int64_t>(state.size());
  const Amplitude* data = state.data();
  double sum = 0.0;
#pragma omp parallel for if (static_cast<std::size_t>(n) >= kParallelThreshold) reduction(+ : sum)
  for (std::int64_t i = 0; i < n; ++i) sum += std::norm(data[i]);
  return sum;
}

}  // namespace qutest::sim::kernels::parallel
