#pragma once

// Row serialization shared by every table-producing subcommand. JSON and
// CSV carry the same columns in the same order.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "paritycf/paritycf.h"

namespace cli {

using Json = nlohmann::ordered_json;

/// Column names of an approximation row.
const std::vector<std::string>& row_columns();
Json row_json(const pcf_row& r);
/// All rows of a table.
Json table_rows(const pcf_table* t);

/// One CSV record; values are rendered from a JSON object whose keys are
/// `columns` (null -> empty, booleans -> true/false).
std::string csv_record(const std::vector<std::string>& columns, const Json& row);
std::string csv_header(const std::vector<std::string>& columns);
void write_csv(std::ostream& out, const std::vector<std::string>& columns, const Json& rows);

}  // namespace cli
