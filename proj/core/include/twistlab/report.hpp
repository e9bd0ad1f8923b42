#pragma once

#include <string>

#include "twistlab/search.hpp"

namespace twistlab {

/// Library version string, also stamped into reports.
const char* version() noexcept;

inline constexpr const char* kReportSchema = "twistlab.search/1";

enum class ReportFormat { Json, Csv, Table };

/// Throws InvalidArgument on an unknown name.
ReportFormat parse_report_format(const std::string& name);

/// JSON without the elapsed time. Identical parameters give identical bytes.
std::string report_body_json(const SearchReport& report);

std::string to_json(const SearchReport& report, bool include_timing = true);
/// One row per finding, preceded by parameter rows; the same data as the JSON.
std::string to_csv(const SearchReport& report);
std::string to_table(const SearchReport& report);

std::string render(const SearchReport& report, ReportFormat format);

}  // namespace twistlab
