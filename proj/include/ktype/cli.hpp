#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "ktype/ktype_table.hpp"

namespace ktype::cli {

enum Exit : int { ok = 0, verify_failed = 1, invalid_params = 2, io_error = 3, schema_error = 4 };

/// Entry point of ktype-cli; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// RFC-4180 table: header ktype_highest_weight,multiplicity. Rank-1 weights
/// print as integers, higher ranks as a quoted "(a,b,...)".
std::string table_csv(const KTypeTable& t);
nlohmann::json table_rows_json(const KTypeTable& t);

}  // namespace ktype::cli
