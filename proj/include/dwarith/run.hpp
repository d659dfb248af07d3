#pragma once

#include <string>

#include <json.hpp>

#include "dwarith/config.hpp"

namespace dwarith {

struct RunResult {
  nlohmann::ordered_json structured;
  std::string text;
  int exit_code = 0;
};

/// Executes one CLI command against a parsed model. Commands: validate, homs,
/// lambda, cs, partition, hdim, glue, transport, suite. Output is
/// deterministic byte-for-byte for a fixed config.
RunResult run_command(const std::string& command, const ModelConfig& config);

/// Maps an error to the CLI exit code: 2 for schema-level problems, 3 for
/// internal failures, 1 for model violations.
int exit_code_for(const Error& error);

}  // namespace dwarith
