#pragma once

// JSON and CSV serialization of verification reports and computed records.
// Output depends only on its inputs: no timestamps, no timings.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "radonfd/config.hpp"
#include "radonfd/verify.hpp"

namespace radonfd {

using FieldValue = std::variant<double, long long, bool, std::string>;

/// One row of computed output with ordered fields.
struct Record {
  std::vector<std::pair<std::string, FieldValue>> fields;

  Record& add(std::string key, FieldValue value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

struct ReportCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inapplicable = 0;
};
ReportCounts count_reports(const std::vector<InequalityReport>& reports);

/// Single report as a JSON object.
std::string report_to_json(const InequalityReport& report, int indent = 2);

/// Full documents, embedding the configuration, the library version and notes.
std::string reports_document_json(const std::vector<InequalityReport>& reports, const RunConfig& config,
                                  const std::vector<std::string>& notes);
std::string reports_document_csv(const std::vector<InequalityReport>& reports, const RunConfig& config,
                                 const std::vector<std::string>& notes);
std::string records_document_json(const std::vector<Record>& records, const RunConfig& config,
                                  const std::vector<std::string>& notes);
std::string records_document_csv(const std::vector<Record>& records, const RunConfig& config,
                                 const std::vector<std::string>& notes);

/// Column names of the CSV report form.
const std::vector<std::string>& report_csv_columns();

std::string library_version();

}  // namespace radonfd
