#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pickfreeze/experiments.hpp"

namespace pickfreeze {

inline constexpr const char* kRecordsSchema = "pickfreeze-records/1";
inline constexpr const char* kSummarySchema = "pickfreeze-summary/1";

/// Column order of the long-format per-replicate file.
const std::vector<std::string>& record_columns();
/// Column order of the per-cell summary file.
const std::vector<std::string>& summary_columns();

/// Provenance written as "# key = value" comment lines.
using CsvMetadata = std::vector<std::pair<std::string, std::string>>;

/// Writes "# schema: <id>", the metadata comments, and the column header.
void write_csv_preamble(std::ostream& out, const char* schema, const CsvMetadata& meta,
                        const std::vector<std::string>& columns);

/// One row per (replicate, block, estimator). Real numbers use 17
/// significant digits; degenerate replicates carry nan fields.
void write_record_rows(std::ostream& out, const CoverageReport& report);
void write_summary_rows(std::ostream& out, const CoverageReport& report);

/// Appends to `path`. A new or empty file gets the full preamble; an
/// existing file must start with the same schema line and only receives a
/// metadata comment block followed by rows. Throws ConfigurationError on a
/// schema mismatch or I/O failure.
void append_records_csv(const std::filesystem::path& path, const CsvMetadata& meta,
                        const std::vector<CoverageReport>& reports);
void append_summary_csv(const std::filesystem::path& path, const CsvMetadata& meta,
                        const std::vector<CoverageReport>& reports);

}  // namespace pickfreeze
