// Full-scale acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any fails. The Monte Carlo criteria take several minutes in total.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bump/bumping.hpp"
#include "bump/experiments.hpp"
#include "bump/plancherel.hpp"
#include "bump/stats.hpp"
#include "test_util.hpp"

namespace {

using namespace bump;
using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, bool passed, const std::string& detail, Clock::time_point start) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s [%02d] %s: %s (%.1fs)\n", passed ? "PASS" : "FAIL", id, name, detail.c_str(), secs);
  std::fflush(stdout);
  if (!passed) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Every check of a summary, as "name=estimate" pairs.
std::string describe_checks(const Json& summary) {
  std::string out;
  for (const auto& c : summary["checks"]) {
    if (!out.empty()) out += ", ";
    out += c["name"].get<std::string>() + "=" + fmt("%.4f", c["estimate"].get<double>());
    if (!c["passed"].get<bool>()) out += " (out of range)";
  }
  return out;
}

bool all_passed(const Json& summary) {
  if (summary["checks"].empty()) return false;
  for (const auto& c : summary["checks"])
    if (!c["passed"].get<bool>()) return false;
  return true;
}

void route_oracles() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  std::int64_t compared = 0;
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const auto w = testing::random_entries(rng, rng() % 41);
    const auto n = static_cast<std::int64_t>(w.size());
    const auto source = finite_source(w);
    for (std::int64_t m = 0; m <= n; ++m) {
      const StopCondition stop{n};
      const auto lazy = lazy_route_oracle(w, m);
      const auto traj = trajectory_of_infinity(source, m, stop);
      const auto sentinel = sentinel_trajectory(source, m, stop);
      ok = ok && lazy.events == traj.events && traj.events == sentinel.events;
      ++compared;
    }
  }
  report(1, "route-oracle-equivalence", ok, std::to_string(compared) + " (w, m) pairs agree event-for-event", start);
}

void schuetzenberger() {
  const auto start = Clock::now();
  int checked = 0;
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      const auto inv = inverse_permutation(sigma);
      ok = ok && integer_rows(rsk(std::span<const int>(sigma)).p) == rsk(std::span<const int>(inv)).q.rows();
      ++checked;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  report(2, "insertion-of-inverse", ok && checked == 873, std::to_string(checked) + " permutations", start);
}

void greene_reversal() {
  const auto start = Clock::now();
  std::mt19937_64 rng(202);
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    auto w = testing::random_entries(rng, rng() % 101);
    const auto p = rsk(w).p;
    std::reverse(w.begin(), w.end());
    ok = ok && rsk(w).p == transpose(p);
  }
  report(3, "reversal-transposes", ok, "1000 sequences", start);
}

void nu_suite() {
  const auto start = Clock::now();
  double worst_negative = 0, worst_mass = 0, worst_dirac = 0, worst_thinning = 0, worst_binomial = 0;
  for (int k = 0; k <= 5; ++k) {
    for (double h : {0.5, 0.1, 0.02}) {
      const auto full = nu_measure(k, 1.0, h);
      worst_dirac = std::max(worst_dirac, std::abs(tv_distance(full, DiscreteMeasure::dirac(k)) -
                                                   (1.0 - std::pow(h / std::expm1(h), k))));
      for (double p : {0.3, 1.0}) {
        const auto nu = nu_measure(k, p, h);
        worst_negative = std::max(worst_negative, -nu.min_weight());
        worst_mass = std::max(worst_mass, std::abs(nu.total_mass() - 1.0));
        const auto thinned = compound_binomial(full, p);
        double l1 = 0;
        for (std::size_t j = 0; j < std::max(thinned.support_size(), nu.support_size()); ++j)
          l1 += std::abs(thinned(static_cast<std::int64_t>(j)) - nu(static_cast<std::int64_t>(j)));
        worst_thinning = std::max(worst_thinning, l1);
        if (h == 0.02) worst_binomial = std::max(worst_binomial, tv_distance(nu, binomial(k, p)));
      }
    }
  }
  const bool ok = worst_negative <= 1e-12 && worst_mass <= 1e-10 && worst_dirac <= 1e-9 && worst_thinning <= 1e-9 &&
                  worst_binomial < 0.05;
  char buf[256];
  std::snprintf(buf, sizeof buf, "negativity %.2g, mass error %.2g, dirac TV error %.2g, thinning L1 %.2g, binomial TV %.4f",
                worst_negative, worst_mass, worst_dirac, worst_thinning, worst_binomial);
  report(4, "nu-measure-suite", ok, buf, start);
}

// Criteria 5, 6, 7 and 11 share one column-hitting run at m = 150.
void hitting_run() {
  auto start = Clock::now();
  auto cfg = default_config("poisson-points");
  cfg.m = 150;
  cfg.trials = 4000;
  cfg.t_max = 64 * 150 * 150;
  cfg.x_max = 2;
  cfg.seed = 20240501;
  const auto points = simulate(cfg);
  const double sim_secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("      column-hitting run: m=150, 4000 trials, t_max=%lld, %.1fs\n", static_cast<long long>(cfg.t_max),
              sim_secs);

  auto with_id = [&](const char* id) {
    auto c = cfg;
    c.id = id;
    c.grid.clear();
    return c;
  };

  const auto frechet_cfg = with_id("frechet");
  const auto frechet = summarize(frechet_cfg, first_point_table(points, cfg.seed));
  report(5, "frechet-cdf", all_passed(frechet),
         describe_checks(frechet) + ", censored " + fmt("%.4f", frechet["censored_rate"].get<double>()), start);

  start = Clock::now();
  auto power_cfg = with_id("powerlaw");
  power_cfg.grid = {2.0};
  const auto power = summarize(power_cfg, points);
  report(6, "ratio-power-law", all_passed(power), describe_checks(power), start);

  start = Clock::now();
  const auto exp_summary = summarize(with_id("poisson-points"), points);
  report(7, "exponential-first-point", all_passed(exp_summary), describe_checks(exp_summary), start);

  start = Clock::now();
  const auto lazy = summarize(with_id("lazy-poisson"), points);
  report(11, "delazification", all_passed(lazy),
         describe_checks(lazy) + ", censored " + fmt("%.4f", lazy["delazification"]["censored_rate"].get<double>()),
         start);
}

void tails() {
  const auto start = Clock::now();
  auto cfg = default_config("tail-y0");
  cfg.m = 1;
  cfg.trials = 200'000;
  cfg.t_max = 1'000'000;
  cfg.y = 100;
  cfg.u = 10'000;
  cfg.seed = 777;
  const auto samples = simulate(cfg);
  const auto y0 = summarize(cfg, samples);
  auto t_cfg = cfg;
  t_cfg.id = "tail-t0";
  const auto t0 = summarize(t_cfg, samples);
  report(8, "tail-laws", all_passed(y0) && all_passed(t0), describe_checks(y0) + ", " + describe_checks(t0), start);
}

void okounkov() {
  const auto start = Clock::now();
  auto cfg = default_config("okounkov-row");
  cfg.n = 40'000;
  cfg.window_fraction = 0.05;
  cfg.rows = 0;
  cfg.trials = 200;
  cfg.seed = 4242;
  const auto report_ = run_experiment(cfg);
  report(9, "row-zero-probability", all_passed(report_.summary), describe_checks(report_.summary), start);
}

void fixed_time() {
  const auto start = Clock::now();
  auto cfg = default_config("fixed-time");
  cfg.m = 10'000;
  cfg.z = 1.0;
  cfg.trials = 5000;
  cfg.m_transposed = 0;
  cfg.seed = 99;
  const auto r = run_experiment(cfg);
  report(10, "fixed-time-poisson", all_passed(r.summary),
         describe_checks(r.summary) + ", t=" + std::to_string(r.summary["row"]["t"].get<std::int64_t>()), start);
}

void plancherel_marginal() {
  const auto start = Clock::now();
  const int trials = 100'000;
  std::map<std::vector<int>, int> freq;
  for (int j = 0; j < trials; ++j)
    ++freq[plancherel_sample(4, SeededStream(31337, static_cast<std::uint64_t>(j))).rows()];
  double worst = 0;
  bool ok = freq.size() == 5;
  for (const auto& shape : testing::partitions_of(4)) {
    const double dim = testing::hook_length_dimension(shape);
    worst = std::max(worst, std::abs(freq[shape] / static_cast<double>(trials) - dim * dim / 24.0));
  }
  ok = ok && worst <= 0.01;
  report(12, "plancherel-size-four", ok, "max deviation " + fmt("%.4f", worst), start);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> steps{route_oracles, schuetzenberger, greene_reversal, nu_suite,
                                                 hitting_run,   tails,           okounkov,        fixed_time,
                                                 plancherel_marginal};
  for (const auto& step : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      std::printf("FAIL error: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
