#include "qutest/assert/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "qutest/diagnostic.hpp"

namespace qutest::assertion {

namespace {

std::set<std::string> support_union(const Distribution& p, const Distribution& q) {
  std::set<std::string> keys;
  for (const auto& [k, _] : p.entries) keys.insert(k);
  for (const auto& [k, _] : q.entries) keys.insert(k);
  return keys;
}

// Series expansion of the lower regularized gamma P(a, x), x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 10000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), x >= a + 1 (modified Lentz).
double gamma_q_continued_fraction(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double total_variation(const Distribution& p, const Distribution& q) {
  double sum = 0.0;
  for (const auto& k : support_union(p, q)) sum += std::abs(p.probability(k) - q.probability(k));
  return 0.5 * sum;
}

double hellinger(const Distribution& p, const Distribution& q) {
  double sum = 0.0;
  for (const auto& k : support_union(p, q)) {
    const double d = std::sqrt(p.probability(k)) - std::sqrt(q.probability(k));
    sum += d * d;
  }
  return std::min(1.0, std::sqrt(sum) / std::sqrt(2.0));
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  double sum = 0.0;
  for (const auto& [k, pk] : p.entries) {
    if (pk <= 0.0) continue;
    const double qk = q.probability(k);
    if (qk <= 0.0) return std::numeric_limits<double>::infinity();
    sum += pk * std::log(pk / qk);
  }
  return std::max(0.0, sum);
}

double shannon_entropy(const Distribution& p) {
  double h = 0.0;
  for (const auto& [_, pk] : p.entries) {
    if (pk > 0.0) h -= pk * std::log2(pk);
  }
  return std::max(0.0, h);
}

double classical_fidelity(const Distribution& p, const Distribution& q) {
  double bc = 0.0;
  for (const auto& [k, pk] : p.entries) bc += std::sqrt(pk * q.probability(k));
  return std::min(1.0, bc * bc);
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0 || std::isnan(x)) throw Error("regularized_gamma_q: invalid arguments");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return std::clamp(1.0 - gamma_p_series(a, x), 0.0, 1.0);
  return std::clamp(gamma_q_continued_fraction(a, x), 0.0, 1.0);
}

double chi_squared_survival(double x, int dof) {
  if (dof < 1) throw Error("chi-squared survival needs at least one degree of freedom");
  if (x <= 0.0) return 1.0;
  return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

ChiSquaredTest chi_squared_test(const Counts& observed, const Distribution& q) {
  ChiSquaredTest result;
  for (const auto& [k, qk] : q.entries) {
    if (!(qk > 0.0)) throw Error("reference probability of \"" + k + "\" must be positive");
  }
  for (const auto& [k, n] : observed.entries) {
    if (n > 0 && q.entries.count(k) == 0) result.unexpected.push_back(k);
  }
  result.dof = static_cast<int>(q.entries.size()) - 1;
  const auto total = static_cast<double>(observed.shots);
  for (const auto& [k, qk] : q.entries) {
    const double expected = total * qk;
    const double diff = static_cast<double>(observed.count(k)) - expected;
    result.statistic += diff * diff / expected;
  }
  if (!result.unexpected.empty()) {
    result.p_value = 0.0;
  } else if (result.dof == 0) {
    result.p_value = observed.count(q.entries.begin()->first) == observed.shots ? 1.0 : 0.0;
  } else {
    result.p_value = chi_squared_survival(result.statistic, result.dof);
  }
  return result;
}

}  // namespace qutest::assertion
