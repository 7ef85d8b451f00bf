#pragma once

// CSV and JSON serialization of experiment reports. Real numbers are
// written with 17 significant digits so every value reads back exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bump/experiments.hpp"

namespace bump {

inline constexpr int report_schema_version = 1;

/// %.17g
std::string format_real(double v);

/// Header row of column names, then one line per sample row.
void write_csv(std::ostream& os, const SampleTable& table);

/// Parses a CSV written by write_csv; the header must match the columns.
/// Throws std::runtime_error on malformed input.
SampleTable read_csv(std::istream& is, const std::vector<Column>& columns);

/// {schema_version, experiment, config, summary, samples?}
nlohmann::ordered_json report_to_json(const ExperimentReport& report, bool include_samples);

/// JSON text of report_to_json with every real formatted by format_real.
void write_json(std::ostream& os, const ExperimentReport& report, bool include_samples);

}  // namespace bump
