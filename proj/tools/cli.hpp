#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p2sd::cli {

enum class OutputFormat { json, text };

struct CliConfig {
  OutputFormat output_format = OutputFormat::json;
  int kronecker_cap = 14;
  unsigned slope_search_depth = 12;
  int parallelism = 1;  // replaced by the core count in default_config()
};

CliConfig default_config();

/// Applies key=value lines (output_format, kronecker_cap, slope_search_depth,
/// parallelism). Blank lines and '#' comments are ignored.
/// Throws std::invalid_argument on unknown keys or bad values.
void apply_config_text(CliConfig& cfg, const std::string& text);

/// Runs one command line (without the program name). Exit codes:
/// 0 success, 1 a verification check failed, 2 usage error, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace p2sd::cli
