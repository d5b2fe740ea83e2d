// Serial reference kernels against the OpenMP kernels on growing statevectors.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qutest/sim/kernels.hpp"

using namespace qutest::sim;

namespace {

std::vector<Amplitude> plus_state(int n) {
  const std::size_t dim = std::size_t{1} << n;
  return std::vector<Amplitude>(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

const Matrix2 kH{Amplitude(M_SQRT1_2), Amplitude(M_SQRT1_2), Amplitude(M_SQRT1_2), Amplitude(-M_SQRT1_2)};

std::vector<Amplitude> cx_matrix() {
  std::vector<Amplitude> m(16);
  m[0 * 4 + 0] = m[2 * 4 + 2] = 1.0;
  m[1 * 4 + 3] = m[3 * 4 + 1] = 1.0;
  return m;
}

template <void (*Apply)(std::span<Amplitude>, const Matrix2&, int)>
void BM_apply_1q(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto psi = plus_state(n);
  int target = 0;
  for (auto _ : state) {
    Apply(psi, kH, target);
    target = (target + 1) % n;
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}

template <void (*Apply)(std::span<Amplitude>, std::span<const Amplitude>, std::span<const int>)>
void BM_apply_cx(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto psi = plus_state(n);
  const auto m = cx_matrix();
  const std::vector<int> qubits{0, n - 1};
  for (auto _ : state) {
    Apply(psi, m, qubits);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}

template <void (*Probs)(std::span<const Amplitude>, std::span<double>)>
void BM_probabilities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = plus_state(n);
  std::vector<double> out(psi.size());
  for (auto _ : state) {
    Probs(psi, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}

}  // namespace

BENCHMARK(BM_apply_1q<kernels::serial::apply_1q>)->Name("apply_1q/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_apply_1q<kernels::parallel::apply_1q>)->Name("apply_1q/parallel")->DenseRange(10, 22, 4);
BENCHMARK(BM_apply_cx<kernels::serial::apply_matrix>)->Name("apply_cx/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_apply_cx<kernels::parallel::apply_matrix>)->Name("apply_cx/parallel")->DenseRange(10, 22, 4);
BENCHMARK(BM_probabilities<kernels::serial::probabilities>)->Name("probabilities/serial")->DenseRange(10, 22, 4);
BENCHMARK(BM_probabilities<kernels::parallel::probabilities>)->Name("probabilities/parallel")->DenseRange(10, 22, 4);

BENCHMARK_MAIN();
