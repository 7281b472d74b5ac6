#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ncquad {

// Parsed command line of one invocation.
struct RunConfig {
  std::string subcommand;
  std::string function_source;
  std::string a_text;
  std::string b_text;
  int n = 0;
  std::optional<long> panels;
  std::vector<std::string> steps;  // one entry for integrate/gcheck, any number for sweep
  int precision = 16;
  std::optional<std::string> reference_text;
  std::string format = "table";  // table | csv | json
  std::string output_path;       // empty = stdout
  bool per_panel = false;
  int grid_points = 512;
};

// Exit codes: 0 ok, 2 input error, 3 estimate unavailable (S still reported).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncquad
