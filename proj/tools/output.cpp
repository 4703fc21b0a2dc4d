#include "output.hpp"

#include <ostream>

namespace cli {

const std::vector<std::string>& row_columns() {
  static const std::vector<std::string> cols = [] {
    std::vector<std::string> c{"value", "numerator", "denominator", "classified", "kind", "n", "k",
                               "parity", "in_B", "in_S", "s_class"};
    for (size_t j = 0; j < PCF_MEMBERSHIPS; ++j) c.emplace_back(pcf_membership_name(j));
    c.emplace_back("delta_word");
    c.emplace_back("m");
    return c;
  }();
  return cols;
}

Json row_json(const pcf_row& r) {
  Json j;
  j["value"] = r.value;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  j["classified"] = r.classified != 0;
  j["kind"] = nullptr;
  j["n"] = nullptr;
  j["k"] = nullptr;
  j["parity"] = pcf_symbol_name(r.parity);
  j["in_B"] = nullptr;
  j["in_S"] = nullptr;
  j["s_class"] = nullptr;
  for (size_t i = 0; i < PCF_MEMBERSHIPS; ++i) j[pcf_membership_name(i)] = nullptr;
  // Unclassified rows (beyond what a decimal certifies) leave these unknown.
  if (r.classified) {
    j["kind"] = r.kind == 0 ? "principal" : "intermediate";
    j["n"] = r.n;
    j["k"] = r.k;
    j["in_B"] = r.in_b != 0;
    j["in_S"] = r.in_s != 0;
    if (r.s_class != PCF_SYM_NONE) j["s_class"] = pcf_symbol_name(r.s_class);
    for (size_t i = 0; i < PCF_MEMBERSHIPS; ++i) j[pcf_membership_name(i)] = r.member[i] != 0;
  }
  if (r.delta_word) {
    j["delta_word"] = r.delta_word;
    j["m"] = r.m;
  } else {
    j["delta_word"] = nullptr;
    j["m"] = nullptr;
  }
  return j;
}

Json table_rows(const pcf_table* t) {
  Json rows = Json::array();
  for (size_t i = 0; i < pcf_table_size(t); ++i) {
    pcf_row r;
    pcf_table_row(t, i, &r);
    rows.push_back(row_json(r));
  }
  return rows;
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return quote(v.get<std::string>());
  return quote(v.dump());
}

}  // namespace

std::string csv_header(const std::vector<std::string>& columns) {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + quote(columns[i]);
  return out;
}

std::string csv_record(const std::vector<std::string>& columns, const Json& row) {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += cell(row.contains(columns[i]) ? row.at(columns[i]) : Json(nullptr));
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns, const Json& rows) {
  out << csv_header(columns) << '\n';
  for (const Json& r : rows) out << csv_record(columns, r) << '\n';
}

}  // namespace cli
