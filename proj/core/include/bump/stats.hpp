#pragma once

// Reference distributions, the Poisson-mixture measures nu(k, p, h), the
// compound binomial operator, total variation distance and empirical
// statistics used by the experiments.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bump {

/// Measure on {0, 1, 2, ...} stored up to its last index; mass beyond is
/// bounded in absolute value by tail_bound().
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  /// Throws std::invalid_argument on non-finite weights or negative tail bound.
  explicit DiscreteMeasure(std::vector<double> weights, double tail_bound = 0.0);

  static DiscreteMeasure dirac(std::int64_t k);

  const std::vector<double>& weights() const noexcept { return weights_; }
  double operator()(std::int64_t k) const noexcept {
    return k >= 0 && static_cast<std::size_t>(k) < weights_.size() ? weights_[static_cast<std::size_t>(k)] : 0.0;
  }
  std::size_t support_size() const noexcept { return weights_.size(); }
  double tail_bound() const noexcept { return tail_bound_; }
  double total_mass() const;
  double min_weight() const;

 private:
  std::vector<double> weights_;
  double tail_bound_ = 0.0;
};

// Closed-form laws. Out-of-domain parameters throw std::invalid_argument.

/// Poisson(z), truncated once the remaining mass is below tail.
DiscreteMeasure poisson(double z, double tail = 1e-12);
double poisson_pmf(double z, std::int64_t k);
/// Upper bound on P(Poisson(z) > n); 1 until n + 2 exceeds z.
double poisson_tail_bound(double z, std::int64_t n);
DiscreteMeasure binomial(int n, double p);
/// CDF of the sum of k independent Exp(1) variables.
double erlang_cdf(int k, double x);
/// e^{-1/u} for u > 0.
double frechet1_cdf(double u);
double exponential_cdf(double x);
/// P(R > u) = u^{-alpha} for u >= 1, else 1.
double pareto_power_survival(double alpha, double u);

/// Stirling numbers of the second kind. The double version is the exact
/// integer converted to double; the integer version throws std::overflow_error
/// when S(m, k) does not fit.
double stirling2(int m, int k);
std::uint64_t stirling2_u64(int m, int k);

/// (e^h - 1)^{-k} sum_j (-1)^{k-j} C(k, j) e^{jh} Poisson(p j h), evaluated
/// in extended precision and truncated with a certified tail bound.
/// Throws std::invalid_argument unless k >= 0, 0 <= p <= 1 and h > 0.
DiscreteMeasure nu_measure(int k, double p, double h);
/// The p = 1 case via h^n k! S(n, k) / ((e^h - 1)^k n!).
DiscreteMeasure nu_measure_closed_form(int k, double h);

/// Thinning: every unit of mass at j is split as Binomial(j, p).
DiscreteMeasure compound_binomial(const DiscreteMeasure& mu, double p);

/// Half the l1 distance.
double tv_distance(const DiscreteMeasure& a, const DiscreteMeasure& b);
/// max over events X of |a(X) - b(X)|.
double tv_max_event(const DiscreteMeasure& a, const DiscreteMeasure& b);

/// Frequencies of non-negative integer samples. Throws on empty input or
/// negative values.
DiscreteMeasure empirical_measure(std::span<const std::int64_t> samples);

class Ecdf {
 public:
  /// Throws std::invalid_argument on empty input.
  explicit Ecdf(std::vector<double> samples);
  /// Fraction of samples <= x.
  double operator()(double x) const;
  std::size_t size() const noexcept { return sorted_.size(); }
  const std::vector<double>& sorted() const noexcept { return sorted_; }

 private:
  std::vector<double> sorted_;
};

using Cdf = std::function<double(double)>;

/// sup_x |F_n(x) - F(x)|. Throws on empty input.
double ks_statistic(std::span<const double> samples, const Cdf& cdf);

/// KS distance restricted to x >= x_min when only samples above x_min are
/// known exactly: F_n(x) = 1 - #{v > x} / n_total. Samples at or below
/// x_min may be passed or omitted; they do not affect the result.
double ks_statistic_above(std::span<const double> samples, std::int64_t n_total, const Cdf& cdf, double x_min);

/// counts[g][c] = number of point sets with exactly c points <= grid[g].
std::vector<std::vector<std::int64_t>> counting_tally(const std::vector<std::vector<double>>& point_sets,
                                                      std::span<const double> grid);

/// Pearson statistic of observed counts against pmf; the last bin collects
/// the pmf mass from its index upwards. Bins with zero expectation are skipped.
double chi_square(std::span<const std::int64_t> counts, const DiscreteMeasure& pmf);

/// sqrt(p (1 - p) / n).
double binomial_standard_error(double p, std::int64_t n);

}  // namespace bump
