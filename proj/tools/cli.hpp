#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace signhom::cli {

enum class Status { ok = 0, property_failed = 1, indeterminate = 2, error = 3 };

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload;
};

inline int exit_code(Status s) { return static_cast<int>(s); }

/// Parses argv (argv[0] is the program name), runs the subcommand, writes
/// its output to `out` and diagnostics to `err`. Usage errors give Status::error.
CommandResult dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace signhom::cli
