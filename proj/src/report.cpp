#include "radonfd/report.hpp"

#include <sstream>

#include "json.hpp"
#include "radonfd/format.hpp"

namespace radonfd {

namespace {

using Json = nlohmann::ordered_json;

Json config_json(const RunConfig& config) {
  Json out = Json::object();
  for (const auto& [k, v] : to_settings(config)) out[k] = v;
  return out;
}

Json report_json(const InequalityReport& r) {
  Json j = Json::object();
  j["check"] = r.check;
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  j["kind"] = r.equality ? "equality" : "inequality";
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["relative_gap"] = r.relative_gap;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["status"] = std::string(to_string(r.status));
  j["tight"] = r.tight;
  if (!r.dovr_source.empty()) j["dovr_source"] = r.dovr_source;
  Json applicability = Json::object();
  for (const auto& [k, v] : r.applicability) applicability[k] = v;
  j["applicability"] = applicability;
  Json constants = Json::array();
  for (const auto& c : r.constants) constants.push_back(Json{{"name", c.name}, {"value", c.value}, {"source", c.source}});
  j["constants"] = constants;
  Json diagnostics = Json::object();
  for (const auto& [k, v] : r.diagnostics) diagnostics[k] = v;
  j["diagnostics"] = diagnostics;
  return j;
}

Json field_json(const FieldValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string field_csv(const FieldValue& v) {
  struct Visitor {
    std::string operator()(double x) const { return format_full(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& x) const { return csv_escape(x); }
  };
  return std::visit(Visitor{}, v);
}

void csv_preamble(std::ostringstream& out, const RunConfig& config, const std::vector<std::string>& notes) {
  out << "# radonfd " << library_version() << '\n';
  for (const auto& [k, v] : to_settings(config)) out << "# " << k << '=' << v << '\n';
  for (const auto& note : notes) out << "# note: " << note << '\n';
}

Json document(const RunConfig& config, const std::vector<std::string>& notes) {
  Json doc = Json::object();
  doc["tool"] = "radonfd";
  doc["version"] = library_version();
  doc["config"] = config_json(config);
  doc["notes"] = notes;
  return doc;
}

std::string input_or_empty(const InequalityReport& r, std::string_view key) {
  auto v = r.input_value(key);
  return v ? *v : std::string();
}

}  // namespace

std::string library_version() { return RADONFD_VERSION; }

ReportCounts count_reports(const std::vector<InequalityReport>& reports) {
  ReportCounts c;
  for (const auto& r : reports) {
    switch (r.status) {
      case ReportStatus::Pass: ++c.pass; break;
      case ReportStatus::Fail: ++c.fail; break;
      case ReportStatus::Inapplicable: ++c.inapplicable; break;
    }
  }
  return c;
}

std::string report_to_json(const InequalityReport& report, int indent) { return report_json(report).dump(indent); }

std::string reports_document_json(const std::vector<InequalityReport>& reports, const RunConfig& config,
                                  const std::vector<std::string>& notes) {
  Json doc = document(config, notes);
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_json(r));
  doc["reports"] = list;
  const auto counts = count_reports(reports);
  doc["summary"] = Json{{"reports", reports.size()},
                        {"pass", counts.pass},
                        {"fail", counts.fail},
                        {"inapplicable", counts.inapplicable}};
  return doc.dump(2) + "\n";
}

const std::vector<std::string>& report_csv_columns() {
  static const std::vector<std::string> columns{"check",  "n",           "q",      "body",      "density",
                                                "lhs",    "rhs",         "margin", "pass",      "dovr_source",
                                                "seed",   "implied_constant", "status", "relative_gap", "tolerance"};
  return columns;
}

std::string reports_document_csv(const std::vector<InequalityReport>& reports, const RunConfig& config,
                                 const std::vector<std::string>& notes) {
  std::ostringstream out;
  csv_preamble(out, config, notes);
  const auto& columns = report_csv_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& r : reports) {
    const auto implied = r.diagnostic_value("implied_constant");
    out << csv_escape(r.check) << ',' << csv_escape(input_or_empty(r, "n")) << ','
        << csv_escape(input_or_empty(r, "q").empty() ? input_or_empty(r, "p") : input_or_empty(r, "q")) << ','
        << csv_escape(input_or_empty(r, "body")) << ',' << csv_escape(input_or_empty(r, "density")) << ','
        << format_full(r.lhs) << ',' << format_full(r.rhs) << ',' << format_full(r.margin) << ','
        << (r.pass ? "true" : "false") << ',' << csv_escape(r.dovr_source) << ',' << config.quad.seed << ','
        << (implied ? format_full(*implied) : std::string()) << ',' << to_string(r.status) << ','
        << format_full(r.relative_gap) << ',' << format_full(r.tolerance) << '\n';
  }
  return out.str();
}

std::string records_document_json(const std::vector<Record>& records, const RunConfig& config,
                                  const std::vector<std::string>& notes) {
  Json doc = document(config, notes);
  Json list = Json::array();
  for (const auto& rec : records) {
    Json row = Json::object();
    for (const auto& [k, v] : rec.fields) row[k] = field_json(v);
    list.push_back(row);
  }
  doc["results"] = list;
  return doc.dump(2) + "\n";
}

std::string records_document_csv(const std::vector<Record>& records, const RunConfig& config,
                                 const std::vector<std::string>& notes) {
  std::ostringstream out;
  csv_preamble(out, config, notes);
  // Columns are the union of field names in first-seen order.
  std::vector<std::string> columns;
  for (const auto& rec : records) {
    for (const auto& [k, v] : rec.fields) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ',';
      for (const auto& [k, v] : rec.fields) {
        if (k == columns[i]) {
          out << field_csv(v);
          break;
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace radonfd
