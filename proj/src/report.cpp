#include "stabletrace/report.hpp"

#include <sstream>
#include <stdexcept>

namespace stabletrace {

namespace {

using json = nlohmann::ordered_json;

const char* kApproxSuffix = " (approx)";

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

// The table with approximate columns spliced in after each exact one.
Table with_decimals(const Table& t, int digits) {
  if (digits <= 0) return t;
  Table out;
  for (size_t i = 0; i < t.columns.size(); ++i) {
    out.add_column(t.columns[i], t.exact[i]);
    if (t.exact[i]) out.add_column(t.columns[i] + kApproxSuffix);
  }
  for (const auto& row : t.rows) {
    std::vector<std::string> r;
    for (size_t i = 0; i < row.size(); ++i) {
      r.push_back(row[i]);
      if (t.exact[i]) r.push_back(row[i].empty() ? "" : Rat::parse(row[i]).to_decimal(digits));
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

void markdown_table(std::ostringstream& out, const Table& t) {
  out << "|";
  for (const auto& c : t.columns) out << " " << md_cell(c) << " |";
  out << "\n|";
  for (size_t i = 0; i < t.columns.size(); ++i) out << (t.exact.size() > i && t.exact[i] ? " ---: |" : " --- |");
  out << "\n";
  for (const auto& row : t.rows) {
    out << "|";
    for (const auto& c : row) out << " " << md_cell(c) << " |";
    out << "\n";
  }
}

std::string parameter_string(const TermReport& r) {
  std::string s;
  for (const auto& [k, v] : r.parameters) s += (s.empty() ? "" : ", ") + k + "=" + v;
  return s;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "markdown" || s == "md") return ReportFormat::markdown;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or markdown)");
}

void Table::add_column(std::string name, bool is_exact) {
  columns.push_back(std::move(name));
  exact.push_back(is_exact);
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw std::logic_error("table row has " + std::to_string(row.size()) + " cells for " +
                           std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

json report_to_json(const TermReport& r, int digits) {
  json j;
  j["group"] = r.group;
  j["kind"] = r.kind;
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  json terms = json::array();
  for (const auto& t : r.terms) {
    json tj;
    tj["label"] = t.label;
    tj["value"] = t.value.str();
    if (digits > 0) tj["approx"] = t.value.to_decimal(digits);
    tj["citation"] = t.citation;
    terms.push_back(tj);
  }
  j["terms"] = terms;
  j["total"] = r.total.str();
  if (digits > 0) j["total_approx"] = r.total.to_decimal(digits);
  j["flags"] = r.flags;
  return j;
}

TermReport report_from_json(const json& j) {
  TermReport r;
  r.group = j.at("group").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) r.parameters.emplace_back(k, v.get<std::string>());
  for (const auto& t : j.at("terms"))
    r.terms.push_back({t.at("label").get<std::string>(), Rat::parse(t.at("value").get<std::string>()),
                       t.at("citation").get<std::string>()});
  r.total = Rat::parse(j.at("total").get<std::string>());
  for (const auto& f : j.at("flags")) r.flags.push_back(f.get<std::string>());
  return r;
}

json document_to_json(const Document& d, int digits) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = d.command;
  j["status"] = d.status;
  j["messages"] = d.messages;
  if (d.table) {
    const Table t = with_decimals(*d.table, digits);
    json tj;
    tj["columns"] = t.columns;
    tj["exact"] = t.exact;
    tj["rows"] = t.rows;
    j["table"] = tj;
  }
  json reports = json::array();
  for (const auto& r : d.reports) reports.push_back(report_to_json(r, digits));
  j["reports"] = reports;
  return j;
}

Document document_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("schema").get<std::string>() != kReportSchema)
    throw std::invalid_argument("unsupported report schema '" + j.at("schema").get<std::string>() + "'");
  Document d;
  d.command = j.at("command").get<std::string>();
  d.status = j.at("status").get<std::string>();
  d.messages = j.at("messages").get<std::vector<std::string>>();
  if (j.contains("table")) {
    const auto& tj = j.at("table");
    const auto cols = tj.at("columns").get<std::vector<std::string>>();
    const auto exact = tj.at("exact").get<std::vector<bool>>();
    const auto rows = tj.at("rows").get<std::vector<std::vector<std::string>>>();
    // Drop the approximate columns so the result is the exact table.
    std::vector<size_t> keep;
    Table t;
    for (size_t i = 0; i < cols.size(); ++i) {
      const std::string& c = cols[i];
      const bool approx = c.size() > std::string(kApproxSuffix).size() &&
                          c.compare(c.size() - std::string(kApproxSuffix).size(), std::string::npos,
                                    kApproxSuffix) == 0 &&
                          i > 0 && exact[i - 1];
      if (approx) continue;
      keep.push_back(i);
      t.add_column(c, exact[i]);
    }
    for (const auto& row : rows) {
      std::vector<std::string> r;
      for (size_t i : keep) r.push_back(row.at(i));
      t.add_row(std::move(r));
    }
    d.table = std::move(t);
  }
  for (const auto& r : j.at("reports")) d.reports.push_back(report_from_json(r));
  return d;
}

std::string render(const Document& d, ReportFormat format, int digits) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::json:
      out << document_to_json(d, digits).dump(2) << "\n";
      break;
    case ReportFormat::csv: {
      if (d.table) {
        const Table t = with_decimals(*d.table, digits);
        for (size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_cell(t.columns[i]);
        out << "\n";
        for (const auto& row : t.rows) {
          for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
          out << "\n";
        }
      } else if (!d.reports.empty()) {
        const auto& keys = d.reports.front().parameters;
        for (const auto& [k, v] : keys) out << csv_cell(k) << ",";
        out << "label,value" << (digits > 0 ? ",value (approx)" : "") << ",citation\n";
        for (const auto& r : d.reports)
          for (const auto& t : r.terms) {
            for (const auto& [k, v] : r.parameters) out << csv_cell(v) << ",";
            out << csv_cell(t.label) << "," << t.value.str();
            if (digits > 0) out << "," << t.value.to_decimal(digits);
            out << "," << csv_cell(t.citation) << "\n";
          }
      }
      for (const auto& m : d.messages) out << "# " << m << "\n";
      break;
    }
    case ReportFormat::markdown: {
      if (d.table) markdown_table(out, with_decimals(*d.table, digits));
      if (d.show_terms)
        for (const auto& r : d.reports) {
          if (d.table || &r != &d.reports.front()) out << "\n";
          out << "### " << r.kind << " (" << parameter_string(r) << ")\n\n";
          Table t;
          t.add_column("term");
          t.add_column("value", true);
          t.add_column("formula");
          for (const auto& term : r.terms) t.add_row({term.label, term.value.str(), term.citation});
          t.add_row({"**total**", r.total.str(), ""});
          markdown_table(out, with_decimals(t, digits));
          for (const auto& f : r.flags) out << "\nflag: " << f << "\n";
        }
      if (!d.messages.empty()) {
        if (d.table || d.show_terms) out << "\n";
        for (const auto& m : d.messages) out << m << "\n";
      }
      break;
    }
  }
  return out.str();
}

}  // namespace stabletrace
