// bump: run a seeded experiment and write its samples or report.
//
//   bump frechet --m 150 --trials 4000 --seed 7 --format json --out frechet.json
//   bump list
//
// Exit codes: 0 success, 2 configuration error, 3 failed check with --check,
// 1 any other error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "bump/experiments.hpp"
#include "bump/report_io.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_check = 3;

struct Options {
  std::string experiment;
  std::optional<std::int64_t> m, trials, t_max, n, m_transposed, y, u;
  std::optional<std::uint64_t> seed;
  std::optional<int> x_max, rows, threads;
  std::optional<double> z, window_fraction;
  std::vector<double> grid, s_grid;
  std::vector<std::string> thresholds;
  std::string out = "-";
  std::string summary_out;
  std::string format = "csv";
  bool samples = false;
  bool check = false;
};

bump::ExperimentConfig build_config(const Options& o) {
  auto cfg = bump::default_config(o.experiment);
  if (o.m) cfg.m = *o.m;
  if (o.trials) cfg.trials = *o.trials;
  if (o.seed) cfg.seed = *o.seed;
  if (o.t_max) cfg.t_max = *o.t_max;
  if (o.x_max) cfg.x_max = *o.x_max;
  if (o.n) cfg.n = *o.n;
  if (o.window_fraction) cfg.window_fraction = *o.window_fraction;
  if (o.rows) cfg.rows = *o.rows;
  if (o.z) cfg.z = *o.z;
  if (o.m_transposed) cfg.m_transposed = *o.m_transposed;
  if (o.y) cfg.y = *o.y;
  if (o.u) cfg.u = *o.u;
  if (o.threads) cfg.threads = *o.threads;
  if (!o.grid.empty()) cfg.grid = o.grid;
  if (!o.s_grid.empty()) cfg.s_grid = o.s_grid;
  for (const auto& t : o.thresholds) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw bump::ConfigError("threshold must be NAME=VALUE: " + t);
    try {
      std::size_t used = 0;
      const double v = std::stod(t.substr(eq + 1), &used);
      if (used != t.size() - eq - 1) throw std::invalid_argument(t);
      cfg.thresholds[t.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw bump::ConfigError("bad threshold value: " + t);
    }
  }
  return bump::resolve(cfg);
}

void print_checks(std::ostream& os, const bump::ExperimentReport& report) {
  for (const auto& c : report.summary["checks"]) {
    os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << ' '
       << bump::format_real(c["estimate"].get<double>()) << '\n';
  }
}

template <class Write>
void with_output(const std::string& path, Write write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path);
  write(os);
  if (!os) throw std::runtime_error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded experiments on bumping routes of random tableaux"};
  Options o;
  app.add_option("experiment", o.experiment, "Experiment id, or 'list'")->required();
  app.add_option("--m", o.m, "Insertion level m");
  app.add_option("--trials", o.trials, "Number of independent trials");
  app.add_option("--seed", o.seed, "Master seed");
  app.add_option("--t-max", o.t_max, "Last simulated step (0: 64 m^2 + 10^6)");
  app.add_option("--x-max", o.x_max, "Highest tracked column");
  app.add_option("--grid", o.grid, "Comma separated u, z, y or t values")->delimiter(',');
  app.add_option("--s-grid", o.s_grid, "Comma separated s values (surface-2d)")->delimiter(',');
  app.add_option("--n", o.n, "Growth size");
  app.add_option("--window-fraction", o.window_fraction, "Relative window length (okounkov-row)");
  app.add_option("--rows", o.rows, "Highest reported row (okounkov-row)");
  app.add_option("--z", o.z, "Fixed-time parameter");
  app.add_option("--m-transposed", o.m_transposed, "Level of the transposed fixed-time regime (0: off)");
  app.add_option("--y", o.y, "Row threshold");
  app.add_option("--u", o.u, "Time threshold");
  app.add_option("--threshold", o.thresholds, "Override a check threshold, NAME=VALUE");
  app.add_option("--threads", o.threads, "Worker threads (0: all)");
  app.add_option("--out", o.out, "Output path, '-' for stdout");
  app.add_option("--summary-out", o.summary_out, "Also write the JSON summary here (csv format)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--samples", o.samples, "Include sample rows in JSON output");
  app.add_flag("--check", o.check, "Exit with status 3 when a built-in check fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_config;
  }

  if (o.experiment == "list") {
    for (const auto& id : bump::experiment_ids()) std::cout << id << '\n';
    return 0;
  }

  bump::ExperimentConfig cfg;
  try {
    cfg = build_config(o);
  } catch (const bump::ConfigError& e) {
    std::cerr << "bump: " << e.what() << '\n';
    return exit_config;
  }

  try {
    const auto report = bump::run_experiment(cfg);
    if (o.format == "json") {
      with_output(o.out, [&](std::ostream& os) { bump::write_json(os, report, o.samples); });
    } else {
      with_output(o.out, [&](std::ostream& os) { bump::write_csv(os, report.samples); });
      if (!o.summary_out.empty())
        with_output(o.summary_out, [&](std::ostream& os) { bump::write_json(os, report, false); });
    }
    print_checks(std::cerr, report);
    if (o.check && !report.passed()) return exit_check;
  } catch (const bump::ConfigError& e) {
    std::cerr << "bump: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "bump: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
