#pragma once

#include <string>

#include "json.hpp"
#include "twistlab/mullineux.hpp"
#include "twistlab/partition.hpp"
#include "twistlab/report.hpp"

namespace twistlab::cli {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& lambda) { return Json(lambda.vec()); }

Json symbol_json(const MullineuxSymbol& symbol);
Partition partition_from_json(const Json& value);

/// Flattens nested objects into dotted keys; arrays of scalars become
/// comma-joined cells.
std::string render_csv(const Json& value);
std::string render_table(const Json& value);
std::string render(const Json& value, ReportFormat format);

}  // namespace twistlab::cli
