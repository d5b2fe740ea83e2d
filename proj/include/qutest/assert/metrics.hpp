#pragma once

#include <string>
#include <vector>

#include "qutest/distribution.hpp"

namespace qutest::assertion {

// Distribution distances and summaries. Sums run over the union of supports.

double total_variation(const Distribution& p, const Distribution& q);
double hellinger(const Distribution& p, const Distribution& q);
// Natural log. Terms with p(x) = 0 contribute 0; p(x) > 0 with q(x) = 0 gives +inf.
double kl_divergence(const Distribution& p, const Distribution& q);
// Bits.
double shannon_entropy(const Distribution& p);
// Squared Bhattacharyya coefficient.
double classical_fidelity(const Distribution& p, const Distribution& q);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_gamma_q(double a, double x);

// P[X >= x] for X ~ chi-squared with `dof` degrees of freedom (dof >= 1).
double chi_squared_survival(double x, int dof);

struct ChiSquaredTest {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  std::vector<std::string> unexpected;  // observed outcomes absent from the reference
};

// Goodness of fit of `observed` against expected counts N * q(x) over the keys
// of `q`. Any observed outcome outside keys(q) forces p = 0. With a single
// reference outcome (dof = 0), p is 1 if every shot landed there, else 0.
// Requires q(x) > 0 for every key.
ChiSquaredTest chi_squared_test(const Counts& observed, const Distribution& q);

}  // namespace qutest::assertion
