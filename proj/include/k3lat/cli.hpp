#pragma once

#include <string>
#include <vector>

#include "k3lat/json_io.hpp"

namespace k3lat {

enum class Status { ok, error };

struct CommandResult {
  Status status = Status::ok;
  Json payload;
  std::vector<std::string> diagnostics;
  int exit_code = 0;       // 0 ok, 1 domain error, 2 usage, 3 malformed JSON
  std::string error_code;  // machine-readable, empty on success
  bool json = false;       // --json given
  std::string text;        // rendered output (JSON or human-readable)
};

/// argv without the program name. Never throws.
CommandResult run(const std::vector<std::string>& argv);

/// Human-readable rendering of a JSON payload as indented key: value lines.
std::string render_text(const Json& j);

}  // namespace k3lat
