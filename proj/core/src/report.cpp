#include "twistlab/report.hpp"

#include <sstream>

#include "json.hpp"

#include "twistlab/error.hpp"

#ifndef TWISTLAB_VERSION
#define TWISTLAB_VERSION "unknown"
#endif

namespace twistlab {

namespace {

using Json = nlohmann::ordered_json;

Json partition_json(const Partition& lambda) { return Json(lambda.vec()); }

Json value_json(const CertificateValue& value) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Partition>) {
          return partition_json(v);
        } else if constexpr (std::is_same_v<T, std::vector<Partition>>) {
          Json list = Json::array();
          for (const auto& lambda : v) list.push_back(partition_json(lambda));
          return list;
        } else {
          return Json(v);
        }
      },
      value);
}

Json findings_json(const std::vector<Finding>& findings) {
  Json list = Json::array();
  for (const auto& finding : findings) {
    Json subjects = Json::array();
    for (const auto& s : finding.subjects) subjects.push_back(partition_json(s));
    Json certificate = Json::object();
    for (const auto& field : finding.certificate) certificate[field.key] = value_json(field.value);
    list.push_back({{"subjects", subjects}, {"certificate", certificate}});
  }
  return list;
}

Json report_json(const SearchReport& report, bool include_timing) {
  Json params = Json::object();
  params["p"] = report.params.p;
  if (report.params.d) params["d"] = *report.params.d;
  if (report.params.lambda) params["lambda"] = partition_json(*report.params.lambda);
  if (report.params.max_b) params["max_b"] = *report.params.max_b;

  Json out = Json::object();
  out["schema"] = kReportSchema;
  out["id"] = report.id;
  out["tool_version"] = report.tool_version;
  out["params"] = params;
  out["scanned"] = report.scanned;
  out["hits"] = findings_json(report.hits);
  out["counterexamples"] = findings_json(report.counterexamples);
  out["observations"] = findings_json(report.observations);
  if (include_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

std::string subjects_text(const Finding& finding) {
  std::string out;
  for (std::size_t i = 0; i < finding.subjects.size(); ++i) {
    if (i) out += '|';
    out += finding.subjects[i].to_string();
  }
  return out;
}

std::string value_text(const CertificateValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Partition>) {
          return v.to_string();
        } else if constexpr (std::is_same_v<T, std::vector<Partition>>) {
          std::string out;
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += '|';
            out += v[i].to_string();
          }
          return out;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      value);
}

std::string certificate_text(const Finding& finding) {
  std::string out;
  for (std::size_t i = 0; i < finding.certificate.size(); ++i) {
    if (i) out += ';';
    out += finding.certificate[i].key + '=' + value_text(finding.certificate[i].value);
  }
  return out;
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

const char* version() noexcept { return TWISTLAB_VERSION; }

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "table") return ReportFormat::Table;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + name + "'");
}

std::string report_body_json(const SearchReport& report) {
  return report_json(report, false).dump(2);
}

std::string to_json(const SearchReport& report, bool include_timing) {
  return report_json(report, include_timing).dump(2);
}

std::string to_csv(const SearchReport& report) {
  std::ostringstream out;
  out << "search_id,section,subjects,certificate\n";
  auto row = [&](const std::string& section, const std::string& subjects,
                 const std::string& certificate) {
    out << csv_field(report.id) << ',' << section << ',' << csv_field(subjects) << ','
        << csv_field(certificate) << '\n';
  };
  row("param", "schema", kReportSchema);
  row("param", "tool_version", report.tool_version);
  row("param", "p", std::to_string(report.params.p));
  if (report.params.d) row("param", "d", std::to_string(*report.params.d));
  if (report.params.lambda) row("param", "lambda", report.params.lambda->to_string());
  if (report.params.max_b) row("param", "max_b", std::to_string(*report.params.max_b));
  row("param", "scanned", std::to_string(report.scanned));
  for (const auto& f : report.hits) row("hit", subjects_text(f), certificate_text(f));
  for (const auto& f : report.counterexamples) {
    row("counterexample", subjects_text(f), certificate_text(f));
  }
  for (const auto& f : report.observations) {
    row("observation", subjects_text(f), certificate_text(f));
  }
  return out.str();
}

std::string to_table(const SearchReport& report) {
  std::ostringstream out;
  out << report.id << "  p=" << report.params.p;
  if (report.params.d) out << " d=" << *report.params.d;
  if (report.params.lambda) out << " lambda=(" << report.params.lambda->to_string() << ')';
  if (report.params.max_b) out << " max_b=" << *report.params.max_b;
  out << "\nscanned " << report.scanned << ", hits " << report.hits.size()
      << ", counterexamples " << report.counterexamples.size() << ", observations "
      << report.observations.size() << '\n';
  auto section = [&](const char* title, const std::vector<Finding>& findings) {
    if (findings.empty()) return;
    out << '\n' << title << '\n';
    for (const auto& f : findings) {
      out << "  " << (f.subjects.empty() ? std::string("-") : subjects_text(f)) << "  "
          << certificate_text(f) << '\n';
    }
  };
  section("hits", report.hits);
  section("counterexamples", report.counterexamples);
  section("observations", report.observations);
  return out.str();
}

std::string render(const SearchReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(report) + '\n';
    case ReportFormat::Csv:
      return to_csv(report);
    case ReportFormat::Table:
      return to_table(report);
  }
  return {};
}

}  // namespace twistlab
