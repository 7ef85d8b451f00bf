#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "bump/bumping.hpp"
#include "bump/plancherel.hpp"
#include "bump/stats.hpp"
#include "bump/window_kernel.hpp"
#include "experiment_detail.hpp"

namespace bump::detail {
namespace {

constexpr auto integer = Column::Kind::integer;
constexpr auto real = Column::Kind::real;
constexpr double unbounded = std::numeric_limits<double>::infinity();

Cell I(std::int64_t v) { return v; }
Cell D(double v) { return v; }

std::string label(const char* name, const char* var, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s(%s=%g)", name, var, v);
  return buf;
}

Json make_check(const std::string& name, double estimate, double lo, double hi) {
  return Json{{"name", name}, {"estimate", estimate}, {"allowed", {lo, hi}}, {"passed", lo <= estimate && estimate <= hi}};
}

/// Passes when estimate < bound.
Json make_strict_check(const std::string& name, double estimate, double bound) {
  return Json{{"name", name}, {"estimate", estimate}, {"below", bound}, {"passed", estimate < bound}};
}

double mean(std::span<const double> v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_sd(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double mu = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double pearson(std::span<const double> a, std::span<const double> b) {
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return saa > 0 && sbb > 0 ? sab / std::sqrt(saa * sbb) : 0.0;
}

// Event counts when some samples are only known through bounds: an event
// is decided when every value compatible with the bounds agrees.
struct Bracket {
  std::int64_t yes = 0;
  std::int64_t ambiguous = 0;
  std::int64_t total = 0;

  void add(bool decided, bool value) {
    ++total;
    if (!decided) ++ambiguous;
    else if (value) ++yes;
  }
  double lower() const { return static_cast<double>(yes) / static_cast<double>(total); }
  double upper() const { return static_cast<double>(yes + ambiguous) / static_cast<double>(total); }
  double estimate() const { return (lower() + upper()) / 2.0; }
  double ambiguous_rate() const { return static_cast<double>(ambiguous) / static_cast<double>(total); }

  Json json() const {
    return Json{{"estimate", estimate()},
                {"lower", lower()},
                {"upper", upper()},
                {"ambiguous_rate", ambiguous_rate()},
                {"standard_error", binomial_standard_error(estimate(), total)}};
  }
};

// ---------------------------------------------------------------------------
// Column hitting times

struct Hit {
  std::int64_t y = 0;
  std::int64_t t = 0;
  bool censored = false;

  double y_upper() const { return censored ? unbounded : static_cast<double>(y); }
};

std::vector<ColumnHit> column_hits(const ExperimentConfig& cfg, std::int64_t trial, int x_max) {
  const SeededStream stream(cfg.seed, static_cast<std::uint64_t>(trial));
  const auto trace = column_window_trajectory(stream, cfg.m, StopCondition{cfg.t_max, 0, -1});
  return hitting_times(trace, x_max);
}

Rows points_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  Rows rows;
  for (const auto& h : column_hits(cfg, trial, cfg.x_max))
    rows.push_back({I(trial), I(cfg.m), I(h.x), I(h.y), I(h.t), I(h.censored)});
  return rows;
}

Rows first_point_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  const auto h = column_hits(cfg, trial, 0).front();
  return {{I(trial), I(cfg.m), I(static_cast<std::int64_t>(cfg.seed)), I(h.y), I(h.t), I(h.censored)}};
}

std::vector<Hit> first_points(const SampleTable& s) {
  const auto y = s.column("Y0");
  const auto t = s.column("T0");
  const auto c = s.column("censored");
  std::vector<Hit> out;
  for (std::size_t r = 0; r < s.rows.size(); ++r) out.push_back({s.integer(r, y), s.integer(r, t), s.integer(r, c) != 0});
  return out;
}

/// hits[trial][x], trials in table order.
std::vector<std::vector<Hit>> point_sets(const SampleTable& s) {
  const auto x = s.column("x");
  const auto y = s.column("Y");
  const auto t = s.column("T");
  const auto c = s.column("censored");
  std::vector<std::vector<Hit>> out;
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    if (s.integer(r, x) == 0) out.emplace_back();
    if (out.empty() || static_cast<std::int64_t>(out.back().size()) != s.integer(r, x))
      throw ConfigError("poisson-points rows must list x = 0, 1, ... per trial");
    out.back().push_back({s.integer(r, y), s.integer(r, t), s.integer(r, c) != 0});
  }
  return out;
}

Json degenerate_summary(std::int64_t trials, const char* note) {
  return Json{{"trials", trials}, {"degenerate", true}, {"note", note}, {"checks", Json::array()}};
}

double censored_rate(std::span<const Hit> hits) {
  if (hits.empty()) return 0.0;
  const auto n = std::count_if(hits.begin(), hits.end(), [](const Hit& h) { return h.censored; });
  return static_cast<double>(n) / static_cast<double>(hits.size());
}

Json summarize_frechet(const ExperimentConfig& cfg, const SampleTable& samples) {
  const auto pts = first_points(samples);
  const auto n = static_cast<std::int64_t>(pts.size());
  if (n == 0) throw ConfigError("no samples");
  if (cfg.m == 0) return degenerate_summary(n, "m = 0 starts in column 0, so Y0 = 0");

  const double two_m = 2.0 * static_cast<double>(cfg.m);
  const double tol = threshold(cfg, "frechet_tolerance");
  Json cdf = Json::array();
  Json checks = Json::array();
  for (double u : cfg.grid) {
    const double cut = two_m * u;
    Bracket b;
    for (const auto& p : pts) {
      const double y = static_cast<double>(p.y);
      if (!p.censored) b.add(true, y <= cut);
      else b.add(y > cut, false);
    }
    const double target = frechet1_cdf(u);
    Json row{{"u", u}, {"uniform_level", std::exp(-1.0 / u)}, {"target", target}};
    row.update(b.json());
    cdf.push_back(row);
    checks.push_back(make_check(label("frechet_cdf", "u", u), b.estimate(), target - tol, target + tol));
  }
  return Json{{"trials", n}, {"censored_rate", censored_rate(pts)}, {"cdf", cdf}, {"checks", checks}};
}

Json summarize_tail_y0(const ExperimentConfig& cfg, const SampleTable& samples) {
  const auto pts = first_points(samples);
  const auto n = static_cast<std::int64_t>(pts.size());
  if (n == 0) throw ConfigError("no samples");
  Bracket b;
  for (const auto& p : pts) {
    if (!p.censored) b.add(true, p.y >= cfg.y);
    else b.add(p.y >= cfg.y, true);
  }
  const double scaled = static_cast<double>(cfg.y) * b.estimate();
  const double target = 2.0 * static_cast<double>(cfg.m);
  Json out{{"trials", n}, {"y", cfg.y}, {"probability", b.json()}, {"scaled", scaled}, {"target", target},
           {"censored_rate", censored_rate(pts)}};
  Json checks = Json::array();
  if (cfg.m > 0) {
    checks.push_back(make_check("tail_y0_scaled", scaled, threshold(cfg, "tail_ratio_lower") * target,
                                threshold(cfg, "tail_ratio_upper") * target));
    checks.push_back(make_strict_check("tail_y0_ambiguous_rate", b.ambiguous_rate(), threshold(cfg, "ambiguous_max")));
  }
  out["checks"] = checks;
  return out;
}

Json summarize_tail_t0(const ExperimentConfig& cfg, const SampleTable& samples) {
  const auto pts = first_points(samples);
  const auto n = static_cast<std::int64_t>(pts.size());
  if (n == 0) throw ConfigError("no samples");
  Bracket b;
  for (const auto& p : pts) {
    if (!p.censored) b.add(true, p.t > cfg.u);
    else b.add(p.t > cfg.u, true);
  }
  const double scaled = std::sqrt(static_cast<double>(cfg.u)) * b.estimate();
  const double target = static_cast<double>(cfg.m);
  Json out{{"trials", n}, {"u", cfg.u}, {"probability", b.json()}, {"scaled", scaled}, {"target", target},
           {"censored_rate", censored_rate(pts)}};
  Json checks = Json::array();
  if (cfg.m > 0) {
    checks.push_back(make_check("tail_t0_scaled", scaled, threshold(cfg, "tail_ratio_lower") * target,
                                threshold(cfg, "tail_ratio_upper") * target));
    checks.push_back(make_strict_check("tail_t0_ambiguous_rate", b.ambiguous_rate(), threshold(cfg, "ambiguous_max")));
  }
  out["checks"] = checks;
  return out;
}

Json summarize_powerlaw(const ExperimentConfig& cfg, const SampleTable& samples) {
  const auto sets = point_sets(samples);
  const auto n = static_cast<std::int64_t>(sets.size());
  if (n == 0) throw ConfigError("no samples");
  if (cfg.m == 0) return degenerate_summary(n, "m = 0 starts in column 0, so every Y is 0");

  const double tol = threshold(cfg, "powerlaw_tolerance");
  Json ratios = Json::array();
  Json checks = Json::array();
  for (int i = 0; i < cfg.x_max; ++i) {
    for (double u : cfg.grid) {
      // Y_i / Y_{i+1} > u; a zero denominator counts as an infinite ratio
      // unless both are zero
      Bracket b;
      for (const auto& hits : sets) {
        const Hit& a = hits[static_cast<std::size_t>(i)];
        const Hit& d = hits[static_cast<std::size_t>(i) + 1];
        const double a_lo = static_cast<double>(a.y);
        const double d_lo = static_cast<double>(d.y);
        if (a_lo > u * d.y_upper()) b.add(true, true);
        else if (a.y_upper() <= u * d_lo) b.add(true, false);
        else b.add(false, false);
      }
      const double target = pareto_power_survival(i + 1, u);
      Json row{{"i", i}, {"u", u}, {"target", target}};
      row.update(b.json());
      ratios.push_back(row);
      char name[64];
      std::snprintf(name, sizeof name, "ratio_survival(i=%d,u=%g)", i, u);
      checks.push_back(make_check(name, b.estimate(), target - tol, target + tol));
    }
  }
  return Json{{"trials", n}, {"ratios", ratios}, {"checks", checks}};
}

/// KS distance of the values scale / f(bound) for column x, where censored
/// trials only bound the value from above.
double censored_ks(const std::vector<std::vector<Hit>>& sets, std::size_t x, double scale, bool use_time,
                   const Cdf& cdf, double& observable_from) {
  std::vector<double> values;
  observable_from = 0.0;
  for (const auto& hits : sets) {
    const Hit& h = hits[x];
    const double raw = static_cast<double>(use_time ? h.t : h.y);
    const double denom = use_time ? std::sqrt(raw) : raw;
    if (h.censored) {
      observable_from = std::max(observable_from, scale / denom);
    } else {
      values.push_back(denom > 0 ? scale / denom : std::numeric_limits<double>::max());
    }
  }
  return ks_statistic_above(values, static_cast<std::int64_t>(sets.size()), cdf, observable_from);
}

Json summarize_poisson_points(const ExperimentConfig& cfg, const SampleTable& samples) {
  const auto sets = point_sets(samples);
  const auto n = static_cast<std::int64_t>(sets.size());
  if (n == 0) throw ConfigError("no samples");
  if (cfg.m == 0) return degenerate_summary(n, "m = 0 starts in column 0, so every Y is 0");

  const double two_m = 2.0 * static_cast<double>(cfg.m);
  Json points = Json::array();
  Json checks = Json::array();
  for (int x = 0; x <= cfg.x_max; ++x) {
    std::vector<Hit> column;
    for (const auto& hits : sets) column.push_back(hits[static_cast<std::size_t>(x)]);
    double from = 0.0;
    const double ks = censored_ks(sets, static_cast<std::size_t>(x), two_m, false,
                                  [k = x + 1](double v) { return erlang_cdf(k, v); }, from);
    points.push_back(Json{{"x", x}, {"censored_rate", censored_rate(column)}, {"ks_erlang", ks}, {"observable_from", from}});
    if (x == 0) checks.push_back(make_check("ks_exponential_first_point", ks, 0.0, threshold(cfg, "exp_ks_max")));
  }
  Json out{{"trials", n}, {"points", points}};
  if (cfg.x_max >= 1) {
    std::vector<double> first, gap;
    for (const auto& hits : sets) {
      if (hits[0].censored || hits[1].censored || hits[0].y == 0 || hits[1].y == 0) continue;
      const double a = two_m / static_cast<double>(hits[0].y);
      first.push_back(a);
      gap.push_back(two_m / static_cast<double>(hits[1].y) - a);
    }
    out["spacing_correlation"] = Json{{"pairs", first.size()}, {"pearson", pearson(first, gap)},
                                      {"mean_first", mean(first)}, {"mean_gap", mean(gap)}};
  }
  out["checks"] = checks;
  return out;
}

Json summarize_lazy_poisson(const ExperimentConfig& cfg, const SampleTable& samples) {
  const auto sets = point_sets(samples);
  const auto n = static_cast<std::int64_t>(sets.size());
  if (n == 0) throw ConfigError("no samples");
  if (cfg.m == 0) return degenerate_summary(n, "m = 0 starts in column 0, so every T is 0");

  const double m = static_cast<double>(cfg.m);
  Json times = Json::array();
  for (int x = 0; x <= cfg.x_max; ++x) {
    double from = 0.0;
    const double ks = censored_ks(sets, static_cast<std::size_t>(x), m, true,
                                  [k = x + 1](double v) { return erlang_cdf(k, v); }, from);
    times.push_back(Json{{"x", x}, {"ks_erlang", ks}, {"observable_from", from}});
  }

  // Y_0 / sqrt(T_0) concentrates at 2; censored trials carry no ratio
  const double dev = threshold(cfg, "delazification_deviation");
  std::vector<double> ratios;
  std::int64_t far = 0;
  for (const auto& hits : sets) {
    if (hits[0].censored) continue;
    const double r = static_cast<double>(hits[0].y) / std::sqrt(static_cast<double>(hits[0].t));
    ratios.push_back(r);
    far += std::abs(r - 2.0) > dev;
  }
  Json checks = Json::array();
  Json delazify{{"used_trials", ratios.size()},
                {"censored_rate", 1.0 - static_cast<double>(ratios.size()) / static_cast<double>(n)},
                {"mean_ratio", mean(ratios)}};
  if (!ratios.empty()) {
    const double frac = static_cast<double>(far) / static_cast<double>(ratios.size());
    delazify["far_fraction"] = frac;
    delazify["standard_error"] = binomial_standard_error(frac, static_cast<std::int64_t>(ratios.size()));
    checks.push_back(make_check("delazification_far_fraction", frac, 0.0, threshold(cfg, "delazification_max")));
  }
  return Json{{"trials", n}, {"times", times}, {"delazification", delazify}, {"checks", checks}};
}

// ---------------------------------------------------------------------------
// Row probabilities of the growth process

std::int64_t window_length(const ExperimentConfig& cfg) {
  return static_cast<std::int64_t>(std::floor(cfg.window_fraction * static_cast<double>(cfg.n)));
}

Rows okounkov_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  const GrowthWindow window{cfg.n, cfg.n + window_length(cfg), cfg.rows};
  const auto trace = trace_growth_rows(SeededStream(cfg.seed, static_cast<std::uint64_t>(trial)), window);
  std::vector<std::int64_t> count(static_cast<std::size_t>(cfg.rows) + 1, 0);
  std::vector<double> scaled(count.size(), 0.0);
  for (std::size_t k = 0; k < trace.rows.size(); ++k) {
    const int r = trace.rows[k];
    if (r < 0) continue;
    ++count[static_cast<std::size_t>(r)];
    scaled[static_cast<std::size_t>(r)] += std::sqrt(static_cast<double>(window.first + 1 + static_cast<std::int64_t>(k)));
  }
  Rows rows;
  for (int r = 0; r <= cfg.rows; ++r)
    rows.push_back({I(trial), I(cfg.n), I(r), I(count[static_cast<std::size_t>(r)]), D(scaled[static_cast<std::size_t>(r)])});
  return rows;
}

Json summarize_okounkov(const ExperimentConfig& cfg, const SampleTable& s) {
  const auto r_col = s.column("r");
  const auto count_col = s.column("count");
  const auto scaled_col = s.column("scaled");
  const double w = static_cast<double>(window_length(cfg));
  std::vector<std::vector<double>> per_row(static_cast<std::size_t>(cfg.rows) + 1);
  std::vector<std::int64_t> counts(per_row.size(), 0);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto r = static_cast<std::size_t>(s.integer(i, r_col));
    if (r >= per_row.size()) throw ConfigError("okounkov-row sample row index out of range");
    per_row[r].push_back(s.real(i, scaled_col) / w);
    counts[r] += s.integer(i, count_col);
  }
  const std::size_t trials = per_row[0].size();
  if (trials == 0) throw ConfigError("no samples");
  Json rows = Json::array();
  Json checks = Json::array();
  double freq_sum = 0.0;
  for (std::size_t r = 0; r < per_row.size(); ++r) {
    const double est = mean(per_row[r]);
    const double freq = static_cast<double>(counts[r]) / (static_cast<double>(trials) * w);
    freq_sum += freq;
    rows.push_back(Json{{"r", r}, {"scaled_probability", est},
                        {"standard_error", sample_sd(per_row[r]) / std::sqrt(static_cast<double>(trials))},
                        {"frequency", freq}, {"target", 1.0}});
    checks.push_back(make_check(label("row_probability_scaled", "r", static_cast<double>(r)), est,
                                threshold(cfg, "okounkov_lower"), threshold(cfg, "okounkov_upper")));
  }
  return Json{{"trials", trials}, {"window", {cfg.n, cfg.n + window_length(cfg)}}, {"rows", rows},
              {"frequency_sum", freq_sum}, {"checks", checks}};
}

// ---------------------------------------------------------------------------
// Fixed-time laws

/// t with (t - m) / sqrt(t) closest to z.
std::int64_t early_time(std::int64_t m, double z) {
  const double root = (z + std::sqrt(z * z + 4.0 * static_cast<double>(m))) / 2.0;
  return std::max<std::int64_t>(m, std::llround(root * root));
}

/// t with m / sqrt(t) closest to z.
std::int64_t late_time(std::int64_t m, double z) {
  const double root = static_cast<double>(m) / z;
  return std::max<std::int64_t>(m, std::llround(root * root));
}

Rows fixed_time_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  const auto j = static_cast<std::uint64_t>(trial);
  const std::int64_t t = early_time(cfg.m, cfg.z);
  const Box early = row_window_trajectory(SeededStream(cfg.seed, j), cfg.m, StopCondition{t}).final_box();
  std::int64_t tt = 0;
  std::int64_t x = -1;
  if (cfg.m_transposed > 0) {
    tt = late_time(cfg.m_transposed, cfg.z);
    x = column_window_trajectory(SeededStream(cfg.seed, j, 1), cfg.m_transposed, StopCondition{tt}).final_box().x;
  }
  return {{I(trial), I(cfg.m), I(t), I(early.y), I(cfg.m_transposed), I(tt), I(x)}};
}

Json summarize_fixed_time(const ExperimentConfig& cfg, const SampleTable& s) {
  const auto y_col = s.column("y");
  const auto x_col = s.column("x");
  std::vector<std::int64_t> ys, xs;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    ys.push_back(s.integer(i, y_col));
    if (s.integer(i, x_col) >= 0) xs.push_back(s.integer(i, x_col));
  }
  if (ys.empty()) throw ConfigError("no samples");
  const auto target = poisson(cfg.z);
  const auto emp_y = empirical_measure(ys);
  const double tv_y = tv_distance(emp_y, target);
  auto mean_of = [](const std::vector<std::int64_t>& v) {
    return static_cast<double>(std::accumulate(v.begin(), v.end(), std::int64_t{0})) / static_cast<double>(v.size());
  };
  Json out{{"trials", ys.size()},
           {"z", cfg.z},
           {"row", Json{{"t", early_time(cfg.m, cfg.z)}, {"mean", mean_of(ys)}, {"tv_poisson", tv_y},
                        {"law", emp_y.weights()}}}};
  if (!xs.empty()) {
    const auto emp_x = empirical_measure(xs);
    out["column"] = Json{{"m", cfg.m_transposed}, {"t", late_time(cfg.m_transposed, cfg.z)}, {"mean", mean_of(xs)},
                         {"tv_poisson", tv_distance(emp_x, target)}, {"law", emp_x.weights()}};
  }
  out["checks"] = Json::array({make_check("row_tv_poisson", tv_y, 0.0, threshold(cfg, "fixed_time_tv_max"))});
  return out;
}

// ---------------------------------------------------------------------------
// Transition frequencies of the recording tableau (exploratory)

Rows transition_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  // Entry (x, y) of the recording tableau is the step at which column x
  // reached height y + 1, i.e. row x of the complemented insertion tableau
  // reached length y + 1.
  const SeededStream stream(cfg.seed, static_cast<std::uint64_t>(trial));
  const int cols = cfg.x_max + 1;
  const auto height = static_cast<std::size_t>(cfg.y) + 2;
  std::vector<std::vector<std::int64_t>> when(static_cast<std::size_t>(cols), std::vector<std::int64_t>(height, -1));
  BottomRows rows(cols);
  for (std::int64_t t = 1; t <= cfg.n; ++t) {
    const int r = rows.insert(Key{-stream.value(t), ~stream.tiebreak(t)});
    if (r >= cols) continue;
    const auto len = static_cast<std::size_t>(rows.row_length(r));
    if (len <= height) when[static_cast<std::size_t>(r)][len - 1] = t;
    if (rows.row_length(cols - 1) >= static_cast<int>(height)) break;
  }
  // A route at (x, y) bumps the entry T(x, y) and moves left in row y + 1
  // exactly when T(x - 1, y + 1) > T(x, y). -1 marks comparisons that the
  // simulated steps do not decide.
  auto later = [&](int xa, std::int64_t ya, int xb, std::int64_t yb) -> std::int64_t {
    const std::int64_t a = when[static_cast<std::size_t>(xa)][static_cast<std::size_t>(ya)];
    const std::int64_t b = when[static_cast<std::size_t>(xb)][static_cast<std::size_t>(yb)];
    if (a < 0 && b < 0) return -1;
    if (a < 0) return 1;
    if (b < 0) return 0;
    return a > b;
  };
  Rows out;
  for (int x = 1; x <= cfg.x_max; ++x)
    for (std::int64_t y = 1; y <= cfg.y; ++y)
      out.push_back({I(trial), I(x), I(y), I(later(x - 1, y + 1, x, y)), I(x >= 2 ? later(x - 2, y + 1, x, y) : -1)});
  return out;
}

Json summarize_transition(const ExperimentConfig& cfg, const SampleTable& s) {
  const auto trial_col = s.column("trial");
  const auto x_col = s.column("x");
  const auto y_col = s.column("y");
  const auto j1 = s.column("jump1");
  const auto j2 = s.column("jump2");
  const auto c = static_cast<std::int64_t>(cfg.grid.front());

  Json grid = Json::array();
  for (double gy : cfg.grid) {
    const auto y = static_cast<std::int64_t>(gy);
    for (int x = 1; x <= cfg.x_max; ++x) {
      std::int64_t n1 = 0, k1 = 0, n2 = 0, k2 = 0;
      for (std::size_t i = 0; i < s.rows.size(); ++i) {
        if (s.integer(i, y_col) != y || s.integer(i, x_col) != x) continue;
        if (const auto v = s.integer(i, j1); v >= 0) {
          ++n1;
          k1 += v;
        }
        if (const auto v = s.integer(i, j2); v >= 0) {
          ++n2;
          k2 += v;
        }
      }
      Json row{{"x", x}, {"y", y}, {"observed", n1}};
      if (n1 > 0) {
        const double f = static_cast<double>(k1) / static_cast<double>(n1);
        row["frequency_left"] = f;
        row["scaled_left"] = static_cast<double>(y) * f;
      }
      if (n2 > 0) {
        const double f = static_cast<double>(k2) / static_cast<double>(n2);
        row["frequency_left2"] = f;
        row["scaled_left2"] = static_cast<double>(y) * f;
      }
      row["target_left"] = x;
      grid.push_back(row);
    }
  }

  // points log(y / c) for y in [c, y_max] per (trial, x), only when every
  // comparison in the range was decided
  Json sets = Json::array();
  for (int x = 1; x <= cfg.x_max; ++x) {
    std::vector<double> counts;
    std::int64_t current_trial = -1;
    double count = 0;
    bool complete = true;
    auto flush = [&] {
      if (current_trial >= 0 && complete) counts.push_back(count);
    };
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      if (s.integer(i, x_col) != x) continue;
      if (s.integer(i, trial_col) != current_trial) {
        flush();
        current_trial = s.integer(i, trial_col);
        count = 0;
        complete = true;
      }
      if (s.integer(i, y_col) < c) continue;
      const auto v = s.integer(i, j1);
      if (v < 0) complete = false;
      else count += static_cast<double>(v);
    }
    flush();
    const double sd = sample_sd(counts);
    const double mu = mean(counts);
    sets.push_back(Json{{"x", x}, {"c", c}, {"complete_trials", counts.size()}, {"mean_count", mu},
                        {"poisson_mean", x * std::log(static_cast<double>(cfg.y) / static_cast<double>(c))},
                        {"dispersion", mu > 0 ? sd * sd / mu : 0.0}});
  }
  return Json{{"exploratory", true}, {"grid", grid}, {"log_point_sets", sets}, {"checks", Json::array()}};
}

// ---------------------------------------------------------------------------
// Two-parameter surface (exploratory)

Rows surface_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  const auto j = static_cast<std::uint64_t>(trial);
  const SeededStream forward(cfg.seed, j, 0);
  const SeededStream backward(cfg.seed, j, 1);
  const double m = static_cast<double>(cfg.m);
  std::vector<std::int64_t> steps;
  for (double t : cfg.grid) steps.push_back(static_cast<std::int64_t>(std::floor(m * m / (t * t))));
  const std::int64_t longest = *std::max_element(steps.begin(), steps.end());

  Rows out;
  for (double s : cfg.s_grid) {
    // prefix xi_{-k}, ..., xi_{-1}, then xi_1, xi_2, ...
    const auto k = static_cast<std::int64_t>(std::floor(m * s));
    const KeySource keys = [&](std::int64_t i) {
      if (i <= k) return Key{backward.value(k - i + 1), backward.tiebreak(k - i + 1)};
      return Key{forward.value(i - k), forward.tiebreak(i - k)};
    };
    const auto trace = column_window_trajectory(keys, k, StopCondition{k + longest});
    for (std::size_t g = 0; g < cfg.grid.size(); ++g)
      out.push_back({I(trial), D(s), D(cfg.grid[g]), I(trace.box_at(k + steps[g]).x)});
  }
  return out;
}

Json summarize_surface(const ExperimentConfig& cfg, const SampleTable& s) {
  const auto s_col = s.column("s");
  const auto t_col = s.column("t");
  const auto x_col = s.column("x");
  Json cells = Json::array();
  for (double sv : cfg.s_grid) {
    for (double tv : cfg.grid) {
      std::vector<double> xs;
      for (std::size_t i = 0; i < s.rows.size(); ++i)
        if (s.real(i, s_col) == sv && s.real(i, t_col) == tv) xs.push_back(s.real(i, x_col));
      const double sd = sample_sd(xs);
      cells.push_back(Json{{"s", sv}, {"t", tv}, {"mean_x", mean(xs)}, {"variance_x", sd * sd}, {"poisson_mean", sv * tv}});
    }
  }
  return Json{{"exploratory", true}, {"cells", cells}, {"checks", Json::array()}};
}

// ---------------------------------------------------------------------------
// Route point sets

Rows tree_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  const SeededStream stream(cfg.seed, static_cast<std::uint64_t>(trial));
  std::vector<Entry> w;
  for (std::int64_t i = 1; i <= cfg.n; ++i) w.push_back(stream.entry(i));
  Rows out;
  const auto tree = bumping_tree(w, cfg.m);
  for (std::size_t level = 0; level < tree.size(); ++level)
    for (const auto& e : tree[level].events)
      out.push_back({I(trial), I(static_cast<std::int64_t>(level)), I(e.t), I(e.box.x), I(e.box.y)});
  return out;
}

Json hyperbola(std::int64_t m, std::span<const double> rows) {
  Json curve = Json::array();
  for (double y : rows) curve.push_back({y, 2.0 * static_cast<double>(m) / y});
  return curve;
}

Json summarize_tree(const ExperimentConfig& cfg, const SampleTable& s) {
  const auto level_col = s.column("level");
  const auto y_col = s.column("y");
  std::vector<std::int64_t> top(static_cast<std::size_t>(cfg.m) + 1, 0);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto level = static_cast<std::size_t>(s.integer(i, level_col));
    if (level >= top.size()) throw ConfigError("bumping-tree level out of range");
    top[level] = std::max(top[level], s.integer(i, y_col));
  }
  Json levels = Json::array();
  for (std::size_t l = 0; l < top.size(); ++l) levels.push_back(Json{{"level", l}, {"highest_row", top[l]}});
  return Json{{"exploratory", true}, {"events", s.rows.size()}, {"levels", levels},
              {"overlay", Json{{"hyperbola", hyperbola(cfg.m, cfg.grid)}}}, {"checks", Json::array()}};
}

Rows projective_trial(const ExperimentConfig& cfg, std::int64_t trial) {
  const SeededStream stream(cfg.seed, static_cast<std::uint64_t>(trial));
  const auto highest = static_cast<int>(std::floor(2.0 * static_cast<double>(cfg.m) / cfg.grid.front()));
  const auto trace = column_window_trajectory(stream, cfg.m, StopCondition{cfg.t_max, -1, highest});
  Rows out;
  for (const auto& p : projective_route(trace, cfg.grid))
    out.push_back({I(trial), I(cfg.m), D(p.z), I(p.row), I(p.x), I(p.missing)});
  return out;
}

Json summarize_projective(const ExperimentConfig& cfg, const SampleTable& s) {
  const auto z_col = s.column("z");
  const auto x_col = s.column("x");
  const auto missing_col = s.column("missing");
  Json points = Json::array();
  Json line = Json::array();
  for (double z : cfg.grid) {
    std::vector<std::int64_t> xs;
    std::int64_t missing = 0, total = 0;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      if (s.real(i, z_col) != z) continue;
      ++total;
      if (s.integer(i, missing_col)) ++missing;
      else xs.push_back(s.integer(i, x_col));
    }
    Json row{{"z", z}, {"missing_rate", total ? static_cast<double>(missing) / static_cast<double>(total) : 0.0}};
    if (!xs.empty()) {
      std::vector<double> v(xs.begin(), xs.end());
      row["mean_x"] = mean(v);
      row["tv_poisson"] = tv_distance(empirical_measure(xs), poisson(z));
    }
    points.push_back(row);
    line.push_back({z, z});
  }
  std::vector<double> rows;
  for (double z : cfg.grid) rows.push_back(std::floor(2.0 * static_cast<double>(cfg.m) / z));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::remove(rows.begin(), rows.end(), 0.0), rows.end());
  return Json{{"exploratory", true}, {"points", points},
              {"overlay", Json{{"line", line}, {"hyperbola", hyperbola(cfg.m, rows)}}}, {"checks", Json::array()}};
}

std::vector<Column> first_point_columns() {
  return {{"trial", integer}, {"m", integer}, {"seed", integer}, {"Y0", integer}, {"T0", integer}, {"censored", integer}};
}

std::vector<Column> point_columns() {
  return {{"trial", integer}, {"m", integer}, {"x", integer}, {"Y", integer}, {"T", integer}, {"censored", integer}};
}

}  // namespace

const std::vector<ExperimentDef>& registry() {
  static const std::vector<ExperimentDef> defs{
      {"frechet", first_point_columns(), {0.5, 1.0, 2.0, 4.0}, first_point_trial, summarize_frechet},
      {"poisson-points", point_columns(), {}, points_trial, summarize_poisson_points},
      {"powerlaw", point_columns(), {2.0}, points_trial, summarize_powerlaw},
      {"tail-y0", first_point_columns(), {}, first_point_trial, summarize_tail_y0},
      {"tail-t0", first_point_columns(), {}, first_point_trial, summarize_tail_t0},
      {"okounkov-row",
       {{"trial", integer}, {"n", integer}, {"r", integer}, {"count", integer}, {"scaled", real}},
       {},
       okounkov_trial,
       summarize_okounkov},
      {"fixed-time",
       {{"trial", integer},
        {"m", integer},
        {"t", integer},
        {"y", integer},
        {"m_transposed", integer},
        {"t_transposed", integer},
        {"x", integer}},
       {},
       fixed_time_trial,
       summarize_fixed_time},
      {"lazy-poisson", point_columns(), {}, points_trial, summarize_lazy_poisson},
      {"transition-conjecture",
       {{"trial", integer}, {"x", integer}, {"y", integer}, {"jump1", integer}, {"jump2", integer}},
       {10.0, 20.0, 40.0, 80.0},
       transition_trial,
       summarize_transition},
      {"surface-2d",
       {{"trial", integer}, {"s", real}, {"t", real}, {"x", integer}},
       {0.5, 1.0, 2.0},
       surface_trial,
       summarize_surface},
      {"bumping-tree",
       {{"trial", integer}, {"level", integer}, {"t", integer}, {"x", integer}, {"y", integer}},
       {1.0, 2.0, 4.0, 8.0},
       tree_trial,
       summarize_tree},
      {"projective",
       {{"trial", integer}, {"m", integer}, {"z", real}, {"row", integer}, {"x", integer}, {"missing", integer}},
       {0.5, 1.0, 2.0, 4.0},
       projective_trial,
       summarize_projective},
  };
  return defs;
}

const ExperimentDef& find_experiment(std::string_view id) {
  for (const auto& def : registry())
    if (def.id == id) return def;
  throw ConfigError("unknown experiment '" + std::string(id) + "'");
}

const std::map<std::string, double>& default_thresholds() {
  static const std::map<std::string, double> t{
      {"frechet_tolerance", 0.03},       {"powerlaw_tolerance", 0.03},   {"exp_ks_max", 0.04},
      {"tail_ratio_lower", 0.8},         {"tail_ratio_upper", 1.2},      {"ambiguous_max", 0.01},
      {"okounkov_lower", 0.85},          {"okounkov_upper", 1.15},       {"fixed_time_tv_max", 0.05},
      {"delazification_deviation", 0.25}, {"delazification_max", 0.05},
  };
  return t;
}

}  // namespace bump::detail
