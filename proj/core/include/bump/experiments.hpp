#pragma once

// Seeded Monte Carlo experiments. Every experiment simulates independent
// trials into a table of sample rows with fixed columns, then derives its
// summary (estimates, standard errors, censoring rates and threshold checks)
// from that table alone, so a report can always be recomputed from its rows.
//
// Trial j of an experiment only reads the streams SeededStream(seed, j, *),
// and rows are collected in trial order, so output does not depend on the
// number of threads.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace bump {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  std::string id;
  std::int64_t m = 150;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  /// 0 selects 64 m^2 + 10^6.
  std::int64_t t_max = 0;
  /// Columns 0..x_max are tracked by hitting-time experiments.
  int x_max = 2;
  /// u, z or y values depending on the experiment; empty selects the default.
  std::vector<double> grid;
  /// s values of surface-2d.
  std::vector<double> s_grid;
  /// Growth size: okounkov-row window start, transition-conjecture steps,
  /// bumping-tree sequence length.
  std::int64_t n = 40'000;
  double window_fraction = 0.05;
  /// Highest row reported by okounkov-row.
  int rows = 0;
  /// Parameter of the fixed-time regimes.
  double z = 1.0;
  /// Level of the transposed fixed-time regime; 0 disables it.
  std::int64_t m_transposed = 100;
  /// Row threshold of tail-y0 and largest row of transition-conjecture.
  std::int64_t y = 100;
  /// Time threshold of tail-t0.
  std::int64_t u = 10'000;
  /// Overrides of the default pass/fail thresholds, by name.
  std::map<std::string, double> thresholds;
  /// 0 uses every hardware thread.
  int threads = 0;
};

/// Ids accepted by run_experiment, in documentation order.
const std::vector<std::string>& experiment_ids();

/// Parameters at the scale used for the built-in checks.
ExperimentConfig default_config(std::string_view id);

/// Fills defaults (t_max, grids) and validates; throws ConfigError.
ExperimentConfig resolve(ExperimentConfig cfg);

/// Threshold by name, with the configured override if any.
double threshold(const ExperimentConfig& cfg, const std::string& name);

struct Column {
  enum class Kind { integer, real };
  std::string name;
  Kind kind = Kind::integer;
};

using Cell = std::variant<std::int64_t, double>;

struct SampleTable {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  std::size_t column(std::string_view name) const;
  std::int64_t integer(std::size_t row, std::size_t col) const;
  double real(std::size_t row, std::size_t col) const;

  friend bool operator==(const SampleTable&, const SampleTable&);
};

/// Sample columns of an experiment; throws ConfigError for unknown ids.
std::vector<Column> sample_columns(std::string_view id);

struct ExperimentReport {
  ExperimentConfig config;
  SampleTable samples;
  nlohmann::ordered_json summary;

  /// All checks in the summary passed.
  bool passed() const;
};

/// Simulates the trials of a resolved or unresolved config.
SampleTable simulate(const ExperimentConfig& cfg);

/// Summary of sample rows. The table must have the columns of cfg.id.
nlohmann::ordered_json summarize(const ExperimentConfig& cfg, const SampleTable& samples);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Rows of a poisson-points table (columns trial,m,x,Y,T,censored) for x = 0,
/// in the layout of frechet, tail-y0 and tail-t0.
SampleTable first_point_table(const SampleTable& points, std::uint64_t seed);

nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg);

}  // namespace bump
