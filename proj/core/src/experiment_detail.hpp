#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

#include "bump/experiments.hpp"

namespace bump::detail {

using Rows = std::vector<std::vector<Cell>>;
using Json = nlohmann::ordered_json;

struct ExperimentDef {
  std::string id;
  std::vector<Column> columns;
  std::vector<double> default_grid;
  Rows (*simulate_trial)(const ExperimentConfig& cfg, std::int64_t trial);
  Json (*summarize)(const ExperimentConfig& cfg, const SampleTable& samples);
};

const std::vector<ExperimentDef>& registry();
/// Throws ConfigError for unknown ids.
const ExperimentDef& find_experiment(std::string_view id);

/// Threshold names and default values.
const std::map<std::string, double>& default_thresholds();

inline int worker_count(int requested, std::int64_t jobs) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(n, 1);
  return static_cast<int>(std::min<std::int64_t>(n, std::max<std::int64_t>(jobs, 1)));
}

/// results[i] = f(i) for i < jobs, computed by a pool that hands out
/// indices from a shared counter. The first exception is rethrown.
template <class F>
auto map_indices(std::int64_t jobs, int threads, const F& f) {
  using R = std::invoke_result_t<const F&, std::int64_t>;
  std::vector<R> results(static_cast<std::size_t>(jobs));
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= jobs) return;
      try {
        results[static_cast<std::size_t>(i)] = f(i);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(jobs);
        return;
      }
    }
  };
  const int n = worker_count(threads, jobs);
  if (n == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace bump::detail
