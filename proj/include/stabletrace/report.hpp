#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabletrace/kottwitz.hpp"

namespace stabletrace {

inline constexpr const char* kReportSchema = "stabletrace.report/1";

enum class ReportFormat { json, csv, markdown };

ReportFormat report_format_from_string(const std::string& s);

struct Table {
  std::vector<std::string> columns;
  /// Columns holding exact rationals; --decimal adds an approximation after each.
  std::vector<bool> exact;
  std::vector<std::vector<std::string>> rows;

  void add_column(std::string name, bool is_exact = false);
  void add_row(std::vector<std::string> row);
};

/// Everything one CLI invocation prints.
struct Document {
  std::string command;
  std::string status = "ok";
  std::vector<std::string> messages;
  std::optional<Table> table;
  std::vector<TermReport> reports;
  /// Markdown prints per-term breakdowns only when set.
  bool show_terms = false;
};

nlohmann::ordered_json report_to_json(const TermReport& r, int decimal_digits = 0);
TermReport report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json document_to_json(const Document& d, int decimal_digits = 0);
/// Inverse of document_to_json, ignoring approximate columns.
Document document_from_json(const std::string& text);

std::string render(const Document& d, ReportFormat format, int decimal_digits = 0);

}  // namespace stabletrace
