#include "adhm/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <set>

namespace adhm::cli {

namespace {

const std::set<std::string>& keys() {
  static const std::set<std::string> k{"genus", "d1",     "d2",  "rmax", "emax", "umax",
                                       "qmax",  "nonneg", "format", "seed", "trials", "alpha",
                                       "v",     "elo",    "ehi", "suite"};
  return k;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid value for " + key + ": '" + value + "'");
  }
  return out;
}

int parse_nonneg(const std::string& key, const std::string& value) {
  const int x = parse_number<int>(key, value);
  if (x < 0) throw UsageError(key + " must be non-negative");
  return x;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw UsageError("invalid boolean for " + key + ": '" + value + "'");
}

}  // namespace

Geometry RunConfig::geometry() const {
  try {
    return Geometry::make(genus, d1, d2.value_or(2 - 2 * genus - d1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

bool is_config_key(const std::string& key) { return keys().count(key) > 0; }

void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "genus") {
    cfg.genus = parse_nonneg(key, value);
  } else if (key == "d1") {
    cfg.d1 = parse_number<int>(key, value);
  } else if (key == "d2") {
    cfg.d2 = parse_number<int>(key, value);
  } else if (key == "rmax") {
    cfg.rmax = parse_nonneg(key, value);
  } else if (key == "emax") {
    cfg.emax = parse_nonneg(key, value);
  } else if (key == "umax") {
    cfg.umax = parse_nonneg(key, value);
  } else if (key == "qmax") {
    cfg.qmax = parse_nonneg(key, value);
  } else if (key == "nonneg") {
    cfg.nonneg = parse_bool(key, value);
  } else if (key == "format") {
    if (value != "json" && value != "csv" && value != "text") {
      throw UsageError("format must be one of json, csv, text");
    }
    cfg.format = value;
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "trials") {
    cfg.trials = parse_nonneg(key, value);
  } else if (key == "alpha") {
    const auto comma = value.find(',');
    if (comma == std::string::npos) throw UsageError("alpha must be given as r,e");
    const RankDegree a{parse_number<int>(key, trim(value.substr(0, comma))),
                       parse_number<int>(key, trim(value.substr(comma + 1)))};
    if (a.r < 1) throw UsageError("alpha needs r >= 1");
    cfg.alpha = a;
  } else if (key == "v") {
    cfg.v = parse_number<int>(key, value);
    if (cfg.v != 1 && cfg.v != 2) throw UsageError("v must be 1 or 2");
  } else if (key == "elo") {
    cfg.elo = parse_number<int>(key, value);
  } else if (key == "ehi") {
    cfg.ehi = parse_number<int>(key, value);
  } else if (key == "suite") {
    cfg.suite = value;
  } else {
    throw UsageError("unknown configuration key '" + key + "'");
  }
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (!is_config_key(key)) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

}  // namespace adhm::cli
