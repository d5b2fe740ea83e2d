#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace qutest::sim {

using Amplitude = std::complex<double>;
using Matrix2 = std::array<Amplitude, 4>;  // row-major

// Statevector kernels. Basis index b holds qubit k in bit k of b.
//
// `serial` is the plain reference implementation; `parallel` is the OpenMP
// version used by the simulator. Both must agree to rounding, which the unit
// tests check and the benchmark compares.
//
// apply_matrix takes a row-major (2^k x 2^k) matrix over `qubits`, where bit j
// of the local index refers to qubits[j].
namespace kernels {

namespace serial {
void apply_1q(std::span<Amplitude> state, const Matrix2& m, int target);
void apply_matrix(std::span<Amplitude> state, std::span<const Amplitude> matrix,
                  std::span<const int> qubits);
void probabilities(std::span<const Amplitude> state, std::span<double> out);
double norm_squared(std::span<const Amplitude> state);
}  // namespace serial

namespace parallel {
void apply_1q(std::span<Amplitude> state, const Matrix2& m, int target);
void apply_matrix(std::span<Amplitude> state, std::span<const Amplitude> matrix,
                  std::span<const int> qubits);
void probabilities(std::span<const Amplitude> state, std::span<double> out);
double norm_squared(std::span<const Amplitude> state);
}  // namespace parallel

// Below this many amplitude groups the parallel kernels run on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

}  // namespace kernels

}  // namespace qutest::sim
