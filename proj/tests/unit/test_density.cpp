#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qutest/diagnostic.hpp"
#include "qutest/sim/density.hpp"
#include "qutest/sim/gates.hpp"

using namespace qutest::sim;

namespace {

Statevector run(int n, std::vector<Operation> ops) {
  Circuit c;
  c.num_qubits = n;
  c.ops = std::move(ops);
  return statevector(c);
}

}  // namespace

TEST(PartialTrace, BellReducedStateIsMaximallyMixed) {
  const auto s = run(2, {{"h", {}, {0}, -1, 0}, {"cx", {}, {0, 1}, -1, 0}});
  const std::vector<int> keep{0};
  const auto rho = partial_trace(s, keep);
  ASSERT_EQ(rho.num_qubits(), 1);
  EXPECT_NEAR(std::abs(rho.matrix(0, 0) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rho.matrix(1, 1) - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rho.matrix(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(rho), 1.0, 1e-9);
}

TEST(PartialTrace, ProductStatesHaveZeroEntropy) {
  const std::vector<int> keep{0};
  EXPECT_LE(von_neumann_entropy(partial_trace(run(2, {}), keep)), 1e-6);
  EXPECT_LE(von_neumann_entropy(partial_trace(run(2, {{"h", {}, {0}, -1, 0}}), keep)), 1e-6);
}

TEST(PartialTrace, RejectsBadPartitions) {
  const auto s = run(3, {});
  EXPECT_THROW(partial_trace(s, std::vector<int>{}), qutest::Error);
  EXPECT_THROW(partial_trace(s, std::vector<int>{0, 1, 2}), qutest::Error);
  EXPECT_THROW(partial_trace(s, std::vector<int>{0, 0}), qutest::Error);
  EXPECT_THROW(partial_trace(s, std::vector<int>{3}), qutest::Error);
  EXPECT_THROW(partial_trace(s, std::vector<int>{-1}), qutest::Error);
}

TEST(PartialTrace, MatchesExplicitTraceOnRandomStates) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto c = oracle::random_circuit(rng, n, 10);
    const auto s = statevector(c);
    std::vector<int> qs(n);
    for (int q = 0; q < n; ++q) qs[q] = q;
    std::shuffle(qs.begin(), qs.end(), rng);
    qs.resize(1 + rng() % (n - 1));
    const auto rho = partial_trace(s, qs);
    const auto ref = oracle::reduced_density(oracle::to_eigen(s), n, qs);
    ASSERT_LT((rho.matrix - ref).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(rho.matrix.trace().real(), 1.0, 1e-12);
  }
}

// Every circuit of up to 4 gates on up to 3 qubits, drawn from a small grid of
// gates and placements, against Schmidt-coefficient entropies.
TEST(Entropy, MatchesSvdOracleOnGateGrid) {
  struct Choice {
    const char* name;
    std::vector<double> angles;
  };
  const std::vector<Choice> one = {{"h", {}}, {"x", {}}, {"t", {}}, {"ry", {0.7}}};
  const std::vector<Choice> two = {{"cx", {}}, {"cp", {1.1}}};
  int checked = 0;
  for (int n = 2; n <= 3; ++n) {
    std::vector<Operation> alphabet;
    for (int q = 0; q < n; ++q)
      for (const auto& g : one) alphabet.push_back({g.name, g.angles, {q}, -1, 0});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b)
          for (const auto& g : two) alphabet.push_back({g.name, g.angles, {a, b}, -1, 0});

    std::vector<std::vector<int>> partitions;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> p;
      for (int q = 0; q < n; ++q)
        if (mask >> q & 1) p.push_back(q);
      partitions.push_back(p);
    }

    // Sequences of length <= 4 through a stride over the alphabet keep the grid tractable.
    const std::size_t A = alphabet.size();
    for (std::size_t len = 0; len <= 4; ++len) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < len; ++i) total *= A;
      const std::size_t stride = std::max<std::size_t>(1, total / 400);
      for (std::size_t code = 0; code < total; code += stride) {
        Circuit c;
        c.num_qubits = n;
        std::size_t rest = code;
        for (std::size_t i = 0; i < len; ++i) {
          c.ops.push_back(alphabet[rest % A]);
          rest /= A;
        }
        const auto s = statevector(c);
        const auto psi = oracle::to_eigen(s);
        for (const auto& p : partitions) {
          const double mine = von_neumann_entropy(partial_trace(s, p));
          ASSERT_NEAR(mine, oracle::entropy_svd(psi, n, p), 1e-9);
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 1000);
}
