#include "output.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "twistlab/error.hpp"

namespace twistlab::cli {

namespace {

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string cell_text(const Json& value) {
  if (!value.is_array()) return scalar_text(value);
  std::string out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i) out += value[i].is_array() ? "|" : ",";
    out += cell_text(value[i]);
  }
  return out;
}

void flatten(const Json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      flatten(child, prefix.empty() ? key : prefix + "." + key, rows);
    }
    return;
  }
  if (value.is_array() && !value.empty() && value.front().is_object()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      flatten(value[i], prefix + "." + std::to_string(i), rows);
    }
    return;
  }
  rows.emplace_back(prefix, cell_text(value));
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Json symbol_json(const MullineuxSymbol& symbol) {
  Json a = Json::array();
  Json r = Json::array();
  for (const auto& column : symbol.columns) {
    a.push_back(column.rim);
    r.push_back(column.rows);
  }
  return {{"a", a}, {"r", r}};
}

Partition partition_from_json(const Json& value) {
  if (!value.is_array()) throw Error(ErrorCode::InvalidPartition, "expected an array of parts");
  std::vector<Part> parts;
  for (const auto& part : value) {
    if (!part.is_number_unsigned()) {
      throw Error(ErrorCode::InvalidPartition, "parts must be non-negative integers");
    }
    parts.push_back(part.get<Part>());
  }
  return Partition(std::move(parts));
}

std::string render_csv(const Json& value) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(value, "", rows);
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [key, text] : rows) out << csv_field(key) << ',' << csv_field(text) << '\n';
  return out.str();
}

std::string render_table(const Json& value) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(value, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  for (const auto& [key, text] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << text << '\n';
  }
  return out.str();
}

std::string render(const Json& value, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return value.dump() + '\n';
    case ReportFormat::Csv:
      return render_csv(value);
    case ReportFormat::Table:
      return render_table(value);
  }
  return {};
}

}  // namespace twistlab::cli
