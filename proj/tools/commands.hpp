#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "typeiv/json_io.hpp"

// Command dispatch shared by the CLI binary and the test suite.

namespace typeiv::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Options {
  bool text = false;
  std::uint64_t seed = 0;
  double tol = -1.0;  // per-command default when negative
  int height = 1;
  int degree = 3;
  int points = 64;
  double epsilon = 1.0;
  int max_order = 60;
};

struct Outcome {
  int exit_code = 0;  // 0 ok, 1 fail (hypothesis violated), 2 error (bad input)
  Json report;
};

struct HandlerResult {
  bool ok = true;
  Json payload;
  std::vector<std::string> diagnostics;
};

using Handler = HandlerResult (*)(const Json&, const Options&);

struct CommandSpec {
  const char* name;
  const char* summary;
  bool needs_input;
  Handler handler;
};

const std::vector<CommandSpec>& dispatch_table();

Outcome run_command(const std::string& name, const Json& input, const Options& opts);

// manifest: [{"command": ..., "input": <path>}, ...]; entries run
// independently and failures are aggregated.
Outcome run_batch(const Json& manifest, const Options& opts, const std::string& base_dir);

std::string render_text(const Json& report);

}  // namespace typeiv::cli
