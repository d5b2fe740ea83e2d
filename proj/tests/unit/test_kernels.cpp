#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qutest/sim/kernels.hpp"
#include "qutest/sim/simulator.hpp"

using namespace qutest::sim;

namespace {

std::vector<Amplitude> random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> v(std::size_t{1} << n);
  double norm = 0;
  for (auto& a : v) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm);
  return v;
}

std::vector<Amplitude> random_matrix(std::mt19937_64& rng, int k) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> m(std::size_t{1} << (2 * k));
  for (auto& a : m) a = {g(rng), g(rng)};
  return m;
}

double max_diff(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

// Sizes straddle kParallelThreshold so both the threaded and inline paths run.
class KernelAgreement : public ::testing::TestWithParam<int> {};

TEST_P(KernelAgreement, SingleQubitKernelsMatchReference) {
  const int n = GetParam();
  std::mt19937_64 rng(100 + n);
  for (int target = 0; target < n; ++target) {
    auto a = random_state(rng, n);
    auto b = a;
    const auto mat = random_matrix(rng, 1);
    Matrix2 m{mat[0], mat[1], mat[2], mat[3]};
    kernels::serial::apply_1q(a, m, target);
    kernels::parallel::apply_1q(b, m, target);
    EXPECT_LT(max_diff(a, b), 1e-12) << "target " << target;
  }
}

TEST_P(KernelAgreement, MultiQubitKernelsMatchReference) {
  const int n = GetParam();
  std::mt19937_64 rng(200 + n);
  for (int k = 1; k <= std::min(3, n); ++k) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<int> qs(n);
      for (int q = 0; q < n; ++q) qs[q] = q;
      std::shuffle(qs.begin(), qs.end(), rng);
      qs.resize(k);
      auto a = random_state(rng, n);
      auto b = a;
      const auto m = random_matrix(rng, k);
      kernels::serial::apply_matrix(a, m, qs);
      kernels::parallel::apply_matrix(b, m, qs);
      EXPECT_LT(max_diff(a, b), 1e-12) << "k=" << k;
    }
  }
}

TEST_P(KernelAgreement, ReductionsMatchReference) {
  const int n = GetParam();
  std::mt19937_64 rng(300 + n);
  const auto s = random_state(rng, n);
  std::vector<double> pa(s.size()), pb(s.size());
  kernels::serial::probabilities(s, pa);
  kernels::parallel::probabilities(s, pb);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(pa[i], pb[i], 1e-15);
  EXPECT_NEAR(kernels::serial::norm_squared(s), kernels::parallel::norm_squared(s), 1e-12);
  EXPECT_NEAR(kernels::serial::norm_squared(s), 1.0, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelAgreement, ::testing::Values(1, 2, 3, 5, 12, 14, 15));

TEST(Kernels, SerialAndParallelPathsGiveSameStatevector) {
  Circuit c;
  c.num_qubits = 14;
  for (int q = 0; q < 14; ++q) c.ops.push_back({"h", {}, {q}, -1, 0});
  for (int q = 0; q + 1 < 14; ++q) c.ops.push_back({"cp", {0.3 * q}, {q, q + 1}, -1, 0});
  c.ops.push_back({"ccx", {}, {0, 7, 13}, -1, 0});
  c.ops.push_back({"u", {0.1, 0.2, 0.3}, {5}, -1, 0});
  const auto a = statevector(c, KernelPath::Serial);
  const auto b = statevector(c, KernelPath::Parallel);
  EXPECT_LT(max_diff(a.amplitudes, b.amplitudes), 1e-12);
}
