#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "stacky/json_io.hpp"

namespace stacky {

struct CliOptions {
  std::string format = "json";  // json | table
  std::int64_t max_cosets = 0;  // 0 means the library default
  std::optional<std::int64_t> budget;
  std::string panel;            // empty means no hom profile
};

/// Runs one verb on a params object and returns its report.  Library errors propagate.
Json run_verb(const std::string& verb, const Json& params, const CliOptions& opt);

/// Renders a report for --format table.
std::string render_table(const Json& report);

/// Entry point: exit 0 on success, 2 on validation errors, 3 on bound errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stacky
