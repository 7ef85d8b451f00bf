#include "bump/experiments.hpp"

#include <cmath>
#include <limits>

#include "experiment_detail.hpp"

namespace bump {

using detail::Json;

std::size_t SampleTable::column(std::string_view name) const {
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (columns[c].name == name) return c;
  throw std::out_of_range("SampleTable: no column " + std::string(name));
}

std::int64_t SampleTable::integer(std::size_t row, std::size_t col) const {
  return std::get<std::int64_t>(rows.at(row).at(col));
}

double SampleTable::real(std::size_t row, std::size_t col) const {
  const Cell& c = rows.at(row).at(col);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  return std::get<double>(c);
}

bool operator==(const SampleTable& a, const SampleTable& b) {
  if (a.columns.size() != b.columns.size()) return false;
  for (std::size_t c = 0; c < a.columns.size(); ++c)
    if (a.columns[c].name != b.columns[c].name || a.columns[c].kind != b.columns[c].kind) return false;
  return a.rows == b.rows;
}

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& def : detail::registry()) out.push_back(def.id);
    return out;
  }();
  return ids;
}

std::vector<Column> sample_columns(std::string_view id) { return detail::find_experiment(id).columns; }

ExperimentConfig default_config(std::string_view id) {
  ExperimentConfig cfg;
  cfg.id = detail::find_experiment(id).id;
  if (id == "frechet" || id == "powerlaw" || id == "poisson-points" || id == "lazy-poisson") {
    cfg.m = 150;
    cfg.trials = 4000;
    cfg.x_max = 2;
  } else if (id == "tail-y0" || id == "tail-t0") {
    cfg.m = 1;
    cfg.trials = 200'000;
    cfg.t_max = 1'000'000;
  } else if (id == "okounkov-row") {
    cfg.n = 40'000;
    cfg.trials = 200;
  } else if (id == "fixed-time") {
    cfg.m = 10'000;
    cfg.trials = 5000;
  } else if (id == "transition-conjecture") {
    cfg.trials = 200;
    cfg.x_max = 3;
  } else if (id == "surface-2d") {
    cfg.m = 30;
    cfg.trials = 200;
  } else if (id == "bumping-tree") {
    cfg.m = 30;
    cfg.n = 30;
    cfg.trials = 1;
  } else if (id == "projective") {
    cfg.m = 150;
    cfg.trials = 1000;
  }
  return cfg;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

void check_grid(const std::vector<double>& grid, double lowest, bool strict_lowest, const char* name) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(std::isfinite(grid[i]), std::string(name) + " values must be finite");
    require(strict_lowest ? grid[i] > lowest : grid[i] >= lowest, std::string(name) + " value out of range");
    require(i == 0 || grid[i - 1] < grid[i], std::string(name) + " must be sorted and distinct");
  }
}

}  // namespace

ExperimentConfig resolve(ExperimentConfig cfg) {
  const auto& def = detail::find_experiment(cfg.id);
  require(cfg.m >= 0, "m must be non-negative");
  require(cfg.m <= 100'000'000, "m is too large");
  require(cfg.trials > 0, "trials must be positive");
  require(cfg.seed <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()),
          "seed must fit in a signed 64-bit integer");
  if (cfg.t_max == 0) cfg.t_max = 64 * cfg.m * cfg.m + 1'000'000;
  require(cfg.t_max >= cfg.m, "t_max must be at least m");
  require(cfg.x_max >= 0, "x_max must be non-negative");
  require(cfg.n > 0, "n must be positive");
  require(cfg.window_fraction > 0 && std::isfinite(cfg.window_fraction), "window fraction must be positive");
  require(cfg.rows >= 0, "rows must be non-negative");
  require(cfg.z > 0 && std::isfinite(cfg.z), "z must be positive");
  require(cfg.m_transposed >= 0, "m_transposed must be non-negative");
  require(cfg.y >= 1, "y must be positive");
  require(cfg.u >= 0, "u must be non-negative");
  require(cfg.threads >= 0, "threads must be non-negative");
  for (const auto& [name, value] : cfg.thresholds) {
    require(detail::default_thresholds().contains(name), "unknown threshold " + name);
    require(std::isfinite(value), "threshold " + name + " must be finite");
  }

  if (cfg.grid.empty()) cfg.grid = def.default_grid;
  if (cfg.id == "surface-2d" && cfg.s_grid.empty()) cfg.s_grid = {0.0, 0.5, 1.0, 2.0};
  check_grid(cfg.grid, 0.0, true, "grid");
  check_grid(cfg.s_grid, 0.0, false, "s grid");

  if (cfg.id == "transition-conjecture") {
    require(cfg.x_max >= 1, "transition-conjecture needs x_max >= 1");
    for (double v : cfg.grid)
      require(v == std::floor(v) && v <= static_cast<double>(cfg.y), "transition-conjecture grid must hold rows <= y");
  }
  if (cfg.id == "bumping-tree") require(cfg.m <= cfg.n, "bumping-tree needs m <= n");
  if (cfg.id == "okounkov-row")
    require(static_cast<std::int64_t>(std::floor(cfg.window_fraction * static_cast<double>(cfg.n))) >= 1,
            "okounkov-row window is empty");
  return cfg;
}

double threshold(const ExperimentConfig& cfg, const std::string& name) {
  if (auto it = cfg.thresholds.find(name); it != cfg.thresholds.end()) return it->second;
  const auto& defaults = detail::default_thresholds();
  auto it = defaults.find(name);
  if (it == defaults.end()) throw std::out_of_range("unknown threshold " + name);
  return it->second;
}

Json config_to_json(const ExperimentConfig& cfg) {
  Json thresholds = Json::object();
  for (const auto& [name, value] : detail::default_thresholds()) thresholds[name] = threshold(cfg, name);
  return Json{{"experiment", cfg.id},
              {"m", cfg.m},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"t_max", cfg.t_max},
              {"x_max", cfg.x_max},
              {"grid", cfg.grid},
              {"s_grid", cfg.s_grid},
              {"n", cfg.n},
              {"window_fraction", cfg.window_fraction},
              {"rows", cfg.rows},
              {"z", cfg.z},
              {"m_transposed", cfg.m_transposed},
              {"y", cfg.y},
              {"u", cfg.u},
              {"thresholds", thresholds}};
}

SampleTable simulate(const ExperimentConfig& config) {
  const ExperimentConfig cfg = resolve(config);
  const auto& def = detail::find_experiment(cfg.id);
  auto per_trial =
      detail::map_indices(cfg.trials, cfg.threads, [&](std::int64_t j) { return def.simulate_trial(cfg, j); });
  SampleTable table{def.columns, {}};
  for (auto& rows : per_trial)
    for (auto& row : rows) table.rows.push_back(std::move(row));
  return table;
}

Json summarize(const ExperimentConfig& config, const SampleTable& samples) {
  const ExperimentConfig cfg = resolve(config);
  const auto& def = detail::find_experiment(cfg.id);
  require(samples.columns.size() == def.columns.size(), "sample columns do not match " + cfg.id);
  for (std::size_t c = 0; c < def.columns.size(); ++c)
    require(samples.columns[c].name == def.columns[c].name && samples.columns[c].kind == def.columns[c].kind,
            "sample columns do not match " + cfg.id);
  return def.summarize(cfg, samples);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  ExperimentReport report;
  report.config = resolve(config);
  report.samples = simulate(report.config);
  report.summary = summarize(report.config, report.samples);
  return report;
}

bool ExperimentReport::passed() const {
  if (!summary.contains("checks")) return true;
  for (const auto& check : summary["checks"])
    if (!check["passed"].get<bool>()) return false;
  return true;
}

SampleTable first_point_table(const SampleTable& points, std::uint64_t seed) {
  const auto trial = points.column("trial");
  const auto m = points.column("m");
  const auto x = points.column("x");
  const auto y = points.column("Y");
  const auto t = points.column("T");
  const auto censored = points.column("censored");
  SampleTable out{sample_columns("frechet"), {}};
  for (std::size_t r = 0; r < points.rows.size(); ++r) {
    if (points.integer(r, x) != 0) continue;
    out.rows.push_back({points.rows[r][trial], points.rows[r][m], static_cast<std::int64_t>(seed),
                        points.rows[r][y], points.rows[r][t], points.rows[r][censored]});
  }
  return out;
}

}  // namespace bump
