#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "braidsong/errors.hpp"

namespace braidsong::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

long long parse_integer(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError,
         "config key '" + key + "' needs an integer, got '" + value + "'");
  }
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError,
         "config key '" + key + "' needs a number, got '" + value + "'");
  }
}

bool parse_flag(const std::string& key, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  fail(ErrorCode::ParseError,
       "config key '" + key + "' needs a boolean, got '" + value + "'");
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail(ErrorCode::ParseError,
           "config line " + std::to_string(line_no) + ": expected key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_config(Config& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    } else if (key == "tolerance") {
      cfg.tolerance = parse_real(key, value);
    } else if (key == "steps") {
      cfg.steps = static_cast<int>(parse_integer(key, value));
    } else if (key == "strands") {
      cfg.helix.strand_count = static_cast<int>(parse_integer(key, value));
    } else if (key == "samples_per_turn") {
      cfg.helix.samples_per_turn = static_cast<int>(parse_integer(key, value));
    } else if (key == "pitch_low") {
      cfg.helix.pitch_low = static_cast<int>(parse_integer(key, value));
    } else if (key == "pitch_high") {
      cfg.helix.pitch_high = static_cast<int>(parse_integer(key, value));
    } else if (key == "step_ticks") {
      cfg.helix.step_ticks = static_cast<int>(parse_integer(key, value));
    } else if (key == "diatonic") {
      cfg.helix.diatonic = parse_flag(key, value);
    } else if (key == "octave_shift") {
      cfg.sonify.dyad_octave_shift =
          static_cast<int>(parse_integer(key, value));
    } else if (key == "gliss_steps") {
      cfg.sonify.gliss_steps = static_cast<int>(parse_integer(key, value));
    } else if (key == "gliss_diatonic") {
      cfg.sonify.gliss_diatonic = parse_flag(key, value);
    } else if (key == "coiling") {
      cfg.sonify.coiling = parse_flag(key, value);
    } else if (key == "coiling_period") {
      cfg.sonify.coiling_period = static_cast<int>(parse_integer(key, value));
    } else if (key == "supercoiling") {
      cfg.sonify.supercoiling = parse_flag(key, value);
    } else if (key == "supercoil_span") {
      cfg.sonify.supercoil_span = parse_integer(key, value);
    } else {
      fail(ErrorCode::ParseError, "unknown config key '" + key + "'");
    }
  }
}

}  // namespace braidsong::cli
