#include "bump/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bump {

using Json = nlohmann::ordered_json;

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string format_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return format_real(std::get<double>(c));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Cell parse_cell(const std::string& text, Column::Kind kind) {
  if (kind == Column::Kind::integer) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size())
      throw std::runtime_error("read_csv: bad integer '" + text + "'");
    return v;
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::runtime_error("read_csv: bad number '" + text + "'");
  return v;
}

bool is_scalar_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void emit(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(key).dump() << ": ";
        emit(os, value, indent + 1);
      }
      os << '\n' << pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty() || is_scalar_array(j)) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          emit(os, j[i], indent + 1);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        emit(os, j[i], indent + 1);
      }
      os << '\n' << pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) os << format_real(v);
      else os << "null";
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

void write_csv(std::ostream& os, const SampleTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c].name;
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_cell(row[c]);
    os << '\n';
  }
}

SampleTable read_csv(std::istream& is, const std::vector<Column>& columns) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: missing header");
  const auto header = split(line);
  if (header.size() != columns.size()) throw std::runtime_error("read_csv: header does not match columns");
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (header[c] != columns[c].name) throw std::runtime_error("read_csv: unexpected column '" + header[c] + "'");
  SampleTable table{columns, {}};
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != columns.size()) throw std::runtime_error("read_csv: wrong field count");
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) row.push_back(parse_cell(fields[c], columns[c].kind));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Json report_to_json(const ExperimentReport& report, bool include_samples) {
  Json out{{"schema_version", report_schema_version},
           {"experiment", report.config.id},
           {"config", config_to_json(report.config)},
           {"summary", report.summary}};
  if (include_samples) {
    Json columns = Json::array();
    for (const auto& c : report.samples.columns) columns.push_back(c.name);
    Json rows = Json::array();
    for (const auto& row : report.samples.rows) {
      Json r = Json::array();
      for (const auto& cell : row) std::visit([&](auto v) { r.push_back(v); }, cell);
      rows.push_back(std::move(r));
    }
    out["samples"] = Json{{"columns", columns}, {"rows", rows}};
  }
  return out;
}

void write_json(std::ostream& os, const ExperimentReport& report, bool include_samples) {
  emit(os, report_to_json(report, include_samples), 0);
  os << '\n';
}

}  // namespace bump
