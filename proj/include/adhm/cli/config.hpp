#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "adhm/charge.hpp"

namespace adhm::cli {

// Raised for any invalid flag or configuration value; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int genus = 0;
  int d1 = 1;
  std::optional<int> d2;  // derived as 2 - 2 genus - d1 when absent
  int rmax = 3;
  int emax = 6;
  int umax = 1;
  int qmax = 3;
  bool nonneg = false;
  std::optional<std::string> format;
  std::uint64_t seed = 1;
  int trials = 100;
  std::optional<RankDegree> alpha;
  int v = 2;
  std::optional<int> elo;
  std::optional<int> ehi;
  std::string suite;

  // Throws UsageError when (genus, d1, d2) is not a valid geometry.
  Geometry geometry() const;
};

// Keys accepted in config files and, with a leading "--", as flags.
bool is_config_key(const std::string& key);

// Parses one value into cfg. Throws UsageError on an unknown key or a value
// that does not parse.
void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Reads "key = value" lines; blank lines and lines starting with '#' are
// ignored. Throws UsageError if the file cannot be read or a line is malformed.
std::map<std::string, std::string> read_config_file(const std::string& path);

}  // namespace adhm::cli
