#include "pickfreeze/csv.hpp"

#include <cmath>
#include <fmt/core.h>
#include <fstream>
#include <ostream>

#include "pickfreeze/errors.hpp"

namespace pickfreeze {

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.17g}", v);
}

void write_metadata(std::ostream& out, const CsvMetadata& meta) {
  for (const auto& [key, value] : meta) out << "# " << key << " = " << value << '\n';
}

template <typename RowWriter>
void append_file(const std::filesystem::path& path, const char* schema, const CsvMetadata& meta,
                 const std::vector<std::string>& columns, RowWriter rows) {
  std::string first_line;
  {
    std::ifstream existing(path);
    if (existing) std::getline(existing, first_line);
  }
  const std::string expected = fmt::format("# schema: {}", schema);
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw ConfigurationError(fmt::format("cannot open '{}' for writing", path.string()));
  if (first_line.empty()) {
    write_csv_preamble(out, schema, meta, columns);
  } else {
    if (first_line != expected)
      throw ConfigurationError(fmt::format("'{}' has schema line '{}', expected '{}'",
                                           path.string(), first_line, expected));
    write_metadata(out, meta);
  }
  rows(out);
  if (!out) throw ConfigurationError(fmt::format("write to '{}' failed", path.string()));
}

}  // namespace

const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> cols = {
      "experiment_id", "replicate", "block",    "estimator",  "N",        "n",
      "a_or_beta",     "estimate",  "ci_lower", "ci_upper",   "contains", "ci_length",
      "degenerate"};
  return cols;
}

const std::vector<std::string>& summary_columns() {
  static const std::vector<std::string> cols = {
      "experiment_id", "model",     "block",      "estimator",      "N",
      "n",             "a_or_beta", "truth",      "replicates",     "coverage",
      "mean_ci_length", "scaled_ci_length", "degenerate"};
  return cols;
}

void write_csv_preamble(std::ostream& out, const char* schema, const CsvMetadata& meta,
                        const std::vector<std::string>& columns) {
  out << "# schema: " << schema << '\n';
  write_metadata(out, meta);
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
}

void write_record_rows(std::ostream& out, const CoverageReport& report) {
  const auto& plan = report.plan;
  for (const auto& r : report.records) {
    out << plan.experiment_id << ',' << r.replicate << ',' << r.block << ','
        << to_string(r.estimator) << ',' << plan.n << ',' << report.learning_size << ','
        << num(report.a_or_beta) << ',' << num(r.estimate) << ',' << num(r.ci.lower) << ','
        << num(r.ci.upper) << ',' << (r.contains ? 1 : 0) << ',' << num(r.ci.length()) << ','
        << (r.degenerate ? 1 : 0) << '\n';
  }
}

void write_summary_rows(std::ostream& out, const CoverageReport& report) {
  const auto& plan = report.plan;
  for (const auto& c : report.cells) {
    out << plan.experiment_id << ',' << report.model << ',' << c.block << ','
        << to_string(c.estimator) << ',' << plan.n << ',' << report.learning_size << ','
        << num(report.a_or_beta) << ',' << num(c.truth) << ',' << c.replicates << ','
        << num(c.coverage) << ',' << num(c.mean_ci_length) << ',' << num(c.scaled_length) << ','
        << c.degenerate << '\n';
  }
}

void append_records_csv(const std::filesystem::path& path, const CsvMetadata& meta,
                        const std::vector<CoverageReport>& reports) {
  append_file(path, kRecordsSchema, meta, record_columns(), [&](std::ostream& out) {
    for (const auto& r : reports) write_record_rows(out, r);
  });
}

void append_summary_csv(const std::filesystem::path& path, const CsvMetadata& meta,
                        const std::vector<CoverageReport>& reports) {
  append_file(path, kSummarySchema, meta, summary_columns(), [&](std::ostream& out) {
    for (const auto& r : reports) write_summary_rows(out, r);
  });
}

}  // namespace pickfreeze
