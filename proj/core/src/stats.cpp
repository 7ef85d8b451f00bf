#include "bump/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace bump {

DiscreteMeasure::DiscreteMeasure(std::vector<double> weights, double tail_bound)
    : weights_(std::move(weights)), tail_bound_(tail_bound) {
  for (double w : weights_)
    if (!std::isfinite(w)) throw std::invalid_argument("DiscreteMeasure: non-finite weight");
  if (!(tail_bound_ >= 0.0)) throw std::invalid_argument("DiscreteMeasure: tail bound must be non-negative");
}

DiscreteMeasure DiscreteMeasure::dirac(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("DiscreteMeasure::dirac: negative atom");
  std::vector<double> w(static_cast<std::size_t>(k) + 1, 0.0);
  w.back() = 1.0;
  return DiscreteMeasure(std::move(w));
}

double DiscreteMeasure::total_mass() const {
  // ascending magnitudes keep the rounding error small for long tails
  std::vector<double> sorted = weights_;
  std::sort(sorted.begin(), sorted.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  return std::accumulate(sorted.begin(), sorted.end(), 0.0);
}

double DiscreteMeasure::min_weight() const {
  return weights_.empty() ? 0.0 : *std::min_element(weights_.begin(), weights_.end());
}

double poisson_pmf(double z, std::int64_t k) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw std::invalid_argument("poisson_pmf: z must be a finite non-negative number");
  if (k < 0) return 0.0;
  if (z == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(z) - z - std::lgamma(kd + 1.0));
}

double poisson_tail_bound(double z, std::int64_t n) {
  if (z == 0.0) return 0.0;
  const double next = static_cast<double>(n) + 2.0;
  if (next <= z) return 1.0;
  return std::min(1.0, poisson_pmf(z, n + 1) * next / (next - z));
}

DiscreteMeasure poisson(double z, double tail) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw std::invalid_argument("poisson: z must be a finite non-negative number");
  if (!(tail > 0.0)) throw std::invalid_argument("poisson: tail must be positive");
  std::vector<double> w;
  std::int64_t k = 0;
  for (;; ++k) {
    w.push_back(poisson_pmf(z, k));
    const double rest = poisson_tail_bound(z, k);
    if (rest <= tail) return DiscreteMeasure(std::move(w), rest);
  }
}

DiscreteMeasure binomial(int n, double p) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: need n >= 0 and 0 <= p <= 1");
  const boost::math::binomial_distribution<double> dist(n, p);
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) w[static_cast<std::size_t>(k)] = boost::math::pdf(dist, k);
  return DiscreteMeasure(std::move(w));
}

double erlang_cdf(int k, double x) {
  if (k < 0) throw std::invalid_argument("erlang_cdf: k must be non-negative");
  if (x <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (k == 0) return 1.0;
  return boost::math::gamma_p(static_cast<double>(k), x);
}

double frechet1_cdf(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

double exponential_cdf(double x) { return x > 0.0 ? -std::expm1(-x) : 0.0; }

double pareto_power_survival(double alpha, double u) {
  if (!(alpha > 0.0)) throw std::invalid_argument("pareto_power_survival: alpha must be positive");
  return u >= 1.0 ? std::pow(u, -alpha) : 1.0;
}

double tv_distance(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  const std::size_t n = std::max(a.support_size(), b.support_size());
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::int64_t>(k);
    sum += std::abs(a(i) - b(i));
  }
  return 0.5 * sum;
}

double tv_max_event(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  const std::size_t n = std::max(a.support_size(), b.support_size());
  double pos = 0.0;
  double neg = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::int64_t>(k);
    const double d = a(i) - b(i);
    (d > 0.0 ? pos : neg) += std::abs(d);
  }
  return std::max(pos, neg);
}

DiscreteMeasure empirical_measure(std::span<const std::int64_t> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_measure: no samples");
  std::vector<std::int64_t> counts;
  for (auto s : samples) {
    if (s < 0) throw std::invalid_argument("empirical_measure: negative sample");
    if (counts.size() <= static_cast<std::size_t>(s)) counts.resize(static_cast<std::size_t>(s) + 1, 0);
    ++counts[static_cast<std::size_t>(s)];
  }
  std::vector<double> w(counts.size());
  const double n = static_cast<double>(samples.size());
  for (std::size_t k = 0; k < counts.size(); ++k) w[k] = static_cast<double>(counts[k]) / n;
  return DiscreteMeasure(std::move(w));
}

Ecdf::Ecdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("Ecdf: no samples");
  std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double ks_statistic(std::span<const double> samples, const Cdf& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::vector<double> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(s[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_statistic_above(std::span<const double> samples, std::int64_t n_total, const Cdf& cdf, double x_min) {
  if (n_total <= 0) throw std::invalid_argument("ks_statistic_above: n_total must be positive");
  std::vector<double> s;
  for (double v : samples)
    if (v > x_min) s.push_back(v);
  if (static_cast<std::int64_t>(s.size()) > n_total)
    throw std::invalid_argument("ks_statistic_above: more samples than n_total");
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(n_total);
  const double a = static_cast<double>(s.size());
  double d = std::abs(1.0 - a / n - cdf(x_min));
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double f = cdf(s[j]);
    const double above_after = a - static_cast<double>(j + 1);
    const double above_before = a - static_cast<double>(j);
    d = std::max({d, std::abs(1.0 - above_after / n - f), std::abs(1.0 - above_before / n - f)});
  }
  return d;
}

std::vector<std::vector<std::int64_t>> counting_tally(const std::vector<std::vector<double>>& point_sets,
                                                      std::span<const double> grid) {
  if (point_sets.empty()) throw std::invalid_argument("counting_tally: no point sets");
  std::vector<std::vector<std::int64_t>> counts(grid.size());
  for (const auto& points : point_sets) {
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const auto c = static_cast<std::size_t>(
          std::count_if(points.begin(), points.end(), [z = grid[g]](double p) { return p <= z; }));
      if (counts[g].size() <= c) counts[g].resize(c + 1, 0);
      ++counts[g][c];
    }
  }
  return counts;
}

double chi_square(std::span<const std::int64_t> counts, const DiscreteMeasure& pmf) {
  if (counts.empty()) throw std::invalid_argument("chi_square: no bins");
  const double n = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
  if (n <= 0.0) throw std::invalid_argument("chi_square: no observations");
  double below = 0.0;
  double stat = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    double p;
    if (k + 1 < counts.size()) {
      p = pmf(static_cast<std::int64_t>(k));
      below += p;
    } else {
      p = std::max(0.0, 1.0 - below);
    }
    const double expected = n * p;
    if (expected <= 0.0) continue;
    const double diff = static_cast<double>(counts[k]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

double binomial_standard_error(double p, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("binomial_standard_error: n must be positive");
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

}  // namespace bump
