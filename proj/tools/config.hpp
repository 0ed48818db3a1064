#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "braidsong/sonify.hpp"

namespace braidsong::cli {

// Everything a command reads besides its positionals. Resolution order is
// flag > config file > built-in default; the file layer is applied here,
// the flag layer by the command wiring.
struct Config {
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  int steps = 5;  // homotopy step count
  HelixParams helix;
  SonifyOptions sonify;
};

// key=value lines; '#' starts a comment, blank lines are skipped.
std::map<std::string, std::string> parse_config_text(const std::string& text);

// Applies file values onto cfg. Unknown keys and unparseable values throw
// ParseError naming the key.
void apply_config(Config& cfg, const std::map<std::string, std::string>& kv);

}  // namespace braidsong::cli
