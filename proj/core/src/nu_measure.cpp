#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/expm1.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "bump/stats.hpp"

namespace bump {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using boost::multiprecision::cpp_int;

// Mass beyond the stored support that we are willing to leave uncertified.
constexpr double kTailTarget = 1e-15;

cpp_int stirling2_exact(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("stirling2: arguments must be non-negative");
  if (k > m) return 0;
  // row[j] = S(n, j), updated in place from n = 0 up to m
  std::vector<cpp_int> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= m; ++n) {
    for (int j = std::min(n, k); j >= 1; --j) {
      const auto uj = static_cast<std::size_t>(j);
      row[uj] = row[uj] * j + row[uj - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

// Smallest n >= n_min with scale * P(Poisson(z) > n) <= target.
std::int64_t truncation_point(double z, double scale, std::int64_t n_min) {
  std::int64_t n = n_min;
  while (scale * poisson_tail_bound(z, n) > kTailTarget) ++n;
  return n;
}

void check_nu_args(int k, double p, double h) {
  if (k < 0) throw std::invalid_argument("nu_measure: k must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("nu_measure: p must lie in [0, 1]");
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("nu_measure: h must be positive");
}

}  // namespace

double stirling2(int m, int k) { return stirling2_exact(m, k).convert_to<double>(); }

std::uint64_t stirling2_u64(int m, int k) {
  const cpp_int s = stirling2_exact(m, k);
  if (s > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("stirling2_u64: value exceeds 64 bits");
  return s.convert_to<std::uint64_t>();
}

DiscreteMeasure nu_measure(int k, double p, double h) {
  check_nu_args(k, p, h);
  const Real hr = h;
  const Real pr = p;
  const Real denom = pow(boost::math::expm1(hr), k);

  // |coefficients| sum to ((e^h + 1) / (e^h - 1))^k, which scales the tail
  // of the largest Poisson component into a bound on the tail of nu.
  const double coeff_scale = std::pow((std::exp(h) + 1.0) / std::expm1(h), k);
  const double z_max = p * h * k;
  const std::int64_t n_max = truncation_point(z_max, coeff_scale, k);

  std::vector<Real> coeff(static_cast<std::size_t>(k) + 1);
  std::vector<Real> rate(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    const Real binom = boost::math::binomial_coefficient<double>(static_cast<unsigned>(k), static_cast<unsigned>(j));
    const Real sign = (k - j) % 2 == 0 ? 1 : -1;
    rate[static_cast<std::size_t>(j)] = pr * j * hr;
    coeff[static_cast<std::size_t>(j)] = sign * binom * exp(j * hr - rate[static_cast<std::size_t>(j)]);
  }

  std::vector<double> weights(static_cast<std::size_t>(n_max) + 1);
  std::vector<Real> terms(static_cast<std::size_t>(k) + 1);
  Real factorial = 1;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (n > 0) factorial *= n;
    for (int j = 0; j <= k; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      // Poisson(0) is the unit mass at 0
      const Real power = rate[uj] == 0 ? Real(n == 0 ? 1 : 0) : Real(pow(rate[uj], n));
      terms[uj] = coeff[uj] * power / factorial;
    }
    std::sort(terms.begin(), terms.end(), [](const Real& a, const Real& b) { return abs(a) < abs(b); });
    Real sum = 0;
    for (const Real& t : terms) sum += t;
    weights[static_cast<std::size_t>(n)] = Real(sum / denom).convert_to<double>();
  }
  return DiscreteMeasure(std::move(weights), kTailTarget);
}

DiscreteMeasure nu_measure_closed_form(int k, double h) {
  check_nu_args(k, 1.0, h);
  const Real hr = h;
  const Real denom = pow(boost::math::expm1(hr), k);
  // S(n, k) <= k^n / k!, so the tail is at most e^{kh} P(Poisson(kh) > n) / (e^h - 1)^k
  const double scale = std::exp(k * h) / std::pow(std::expm1(h), k);
  const std::int64_t n_max = truncation_point(k * h, scale, k);

  Real k_factorial = 1;
  for (int i = 2; i <= k; ++i) k_factorial *= i;

  std::vector<double> weights(static_cast<std::size_t>(n_max) + 1, 0.0);
  Real n_factorial = 1;
  Real h_power = 1;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      n_factorial *= n;
      h_power *= hr;
    }
    if (n < k) continue;
    const Real s = Real(stirling2_exact(static_cast<int>(n), k));
    weights[static_cast<std::size_t>(n)] = Real(h_power * k_factorial * s / (denom * n_factorial)).convert_to<double>();
  }
  return DiscreteMeasure(std::move(weights), kTailTarget);
}

DiscreteMeasure compound_binomial(const DiscreteMeasure& mu, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("compound_binomial: p must lie in [0, 1]");
  const std::size_t n = mu.support_size();
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double mass = mu(static_cast<std::int64_t>(j));
    if (mass == 0.0) continue;
    const boost::math::binomial_distribution<double> split(static_cast<double>(j), p);
    for (std::size_t k = 0; k <= j; ++k) out[k] += mass * boost::math::pdf(split, static_cast<double>(k));
  }
  return DiscreteMeasure(std::move(out), mu.tail_bound());
}

}  // namespace bump
