#include "adhm/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "adhm/cli/config.hpp"
#include "adhm/cli/io.hpp"
#include "adhm/hnconfig.hpp"
#include "adhm/localcurve.hpp"
#include "adhm/suites.hpp"

namespace adhm::cli {

namespace {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

class Logger {
 public:
  explicit Logger(std::ostream& err) : err_(err) {
    const char* env = std::getenv("LOG_LEVEL");
    const std::string v = env ? env : "error";
    if (v == "info") level_ = LogLevel::Info;
    if (v == "debug") level_ = LogLevel::Debug;
  }

  void error(const std::string& msg) const { err_ << "error: " << msg << "\n"; }
  void info(const std::string& msg) const { emit(LogLevel::Info, "info", msg); }
  void debug(const std::string& msg) const { emit(LogLevel::Debug, "debug", msg); }

 private:
  void emit(LogLevel l, const char* tag, const std::string& msg) const {
    if (static_cast<int>(level_) >= static_cast<int>(l)) err_ << tag << ": " << msg << "\n";
  }

  std::ostream& err_;
  LogLevel level_ = LogLevel::Error;
};

struct Subcommand {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;
};

void add_keys(Subcommand& sc, const std::vector<std::pair<std::string, std::string>>& keys) {
  sc.app->add_option("--config", sc.config_path, "key = value configuration file");
  for (const auto& [key, help] : keys) {
    if (key == "nonneg") {
      sc.options[key] = sc.app->add_flag("--" + key, help);
    } else {
      sc.options[key] = sc.app->add_option("--" + key, sc.values[key], help);
    }
  }
}

// Defaults, then the config file, then explicit flags.
RunConfig resolve(const Subcommand& sc) {
  RunConfig cfg;
  if (!sc.config_path.empty()) {
    for (const auto& [k, v] : read_config_file(sc.config_path)) apply_config_value(cfg, k, v);
  }
  for (const auto& [key, opt] : sc.options) {
    if (opt->count() == 0) continue;
    apply_config_value(cfg, key, key == "nonneg" ? "true" : sc.values.at(key));
  }
  return cfg;
}

std::string format_or(const RunConfig& cfg, const std::string& fallback,
                      const std::vector<std::string>& allowed) {
  const std::string f = cfg.format.value_or(fallback);
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw UsageError("format '" + f + "' is not supported by this command");
  }
  return f;
}

Geometry local_curve_geometry(const RunConfig& cfg) {
  const Geometry geom = cfg.geometry();
  if (!geom.is_genus0_local_curve()) {
    throw UsageError("this command needs a genus-0 local curve with (d1,d2) = (1,1) or (0,2)");
  }
  return geom;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out, const Logger& log) {
  const Geometry geom = local_curve_geometry(cfg);
  const std::string format = format_or(cfg, "json", {"json", "csv"});
  const LocalCurveConfig lc{geom.d1, TruncationBounds{cfg.rmax, cfg.emax}};
  log.info("extracting asymptotic invariants for r <= " + std::to_string(cfg.rmax) +
           ", e <= " + std::to_string(cfg.emax));

  TableDocument doc{geom, cfg.rmax, cfg.emax, extract_asymptotic(lc)};
  for (int r = 1; r <= cfg.rmax; ++r) {
    for (int e = 0; e <= cfg.emax; ++e) doc.table.set(Charge(r, e, 0), higgs_invariant(r, e, geom.d1));
  }
  out << (format == "json" ? table_to_json_text(doc) : table_to_csv(doc.table));
  return 0;
}

int report(const SuiteReport& rep, std::ostream& out) {
  for (const SuiteResult& r : rep.results) {
    if (r.pass()) {
      out << "PASS " << r.name << " (" << r.checks << " checks)\n";
      continue;
    }
    out << "FAIL " << r.name << " (" << r.failures.size() << " of " << r.checks
        << " checks failed)\n";
    for (const std::string& f : r.failures) out << "  " << f << "\n";
  }
  return rep.pass() ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, const Logger& log) {
  (void)format_or(cfg, "text", {"text"});
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (cfg.suite == "closed-form") {
    const Geometry geom = local_curve_geometry(cfg);
    rep = run_closed_form_suite(LocalCurveConfig{geom.d1, TruncationBounds{cfg.rmax, cfg.emax}});
  } else if (cfg.suite == "ks-vs-js") {
    rep = run_ks_vs_js_suite(cfg.seed, cfg.trials);
  } else if (cfg.suite == "group-identity") {
    rep = run_group_identity_suite(cfg.seed, cfg.trials, true);
  } else if (cfg.suite == "algebra") {
    AlgebraSuiteOptions opts;
    opts.seed = cfg.seed;
    rep = run_algebra_suite(opts);
  } else if (cfg.suite.empty()) {
    throw UsageError("--suite is required (closed-form, ks-vs-js, group-identity, algebra)");
  } else {
    throw UsageError("unknown suite '" + cfg.suite + "'");
  }
  const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
  log.info("suite " + cfg.suite + " finished in " + std::to_string(secs.count()) + " s");
  return report(rep, out);
}

int cmd_walls(const RunConfig& cfg, std::ostream& out, const Logger& log) {
  (void)cfg.geometry();
  const std::string format = format_or(cfg, "text", {"text", "json"});
  if (!cfg.alpha) throw UsageError("--alpha r,e is required");
  const RankDegree a = *cfg.alpha;
  const DegreeWindow window{cfg.elo.value_or(std::min(0, a.e)), cfg.ehi.value_or(std::max(0, a.e))};
  if (window.lo > window.hi) throw UsageError("empty degree window");
  log.debug("degree window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) + "]");

  const WallSet ws = enumerate_walls(a, cfg.v, window, cfg.nonneg);
  if (format == "json") {
    out << walls_to_json(ws.walls).dump() << "\n";
  } else {
    for (const Rational& w : ws.walls) out << to_string(w) << "\n";
  }
  return 0;
}

int cmd_series(const RunConfig& cfg, std::ostream& out, const Logger& log) {
  const Geometry geom = local_curve_geometry(cfg);
  const std::string format = format_or(cfg, "text", {"text", "json"});
  log.info("expanding Z_" + std::to_string(cfg.v) + " to u^" + std::to_string(cfg.umax) + " q^" +
           std::to_string(cfg.qmax));
  std::optional<InvariantTable> a1;
  if (cfg.v == 2) a1 = closed_form_table_v1(geom.d1, cfg.umax, cfg.qmax);
  const BiSeries z = closed_form_series(cfg.v, geom.d1, cfg.umax, cfg.qmax, a1);
  out << (format == "json" ? series_to_json(z).dump(2) : to_text(z)) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Logger log(err);
  CLI::App app{"Exact wallcrossing and genus-0 invariants of ADHM sheaves on local curves", "adhm"};
  app.require_subcommand(1);

  Subcommand inv;
  inv.app = app.add_subcommand("invariants", "asymptotic-chamber invariants of a genus-0 local curve");
  add_keys(inv, {{"genus", "curve genus"},
                 {"d1", "degree of the first twisting bundle"},
                 {"d2", "degree of the second twisting bundle"},
                 {"rmax", "largest rank"},
                 {"emax", "largest degree"},
                 {"format", "json or csv"}});

  Subcommand ver;
  ver.app = app.add_subcommand("verify", "run a verification suite");
  add_keys(ver, {{"suite", "closed-form, ks-vs-js, group-identity or algebra"},
                 {"seed", "random seed"},
                 {"trials", "number of random wall instances"},
                 {"genus", "curve genus"},
                 {"d1", "degree of the first twisting bundle"},
                 {"d2", "degree of the second twisting bundle"},
                 {"rmax", "largest rank"},
                 {"emax", "largest degree"},
                 {"format", "text"}});

  Subcommand walls;
  walls.app = app.add_subcommand("walls", "critical stability parameters of a type");
  add_keys(walls, {{"alpha", "rank and degree as r,e"},
                   {"v", "framing, 1 or 2"},
                   {"nonneg", "only nonnegative part degrees"},
                   {"elo", "lowest part degree"},
                   {"ehi", "highest part degree"},
                   {"genus", "curve genus"},
                   {"d1", "degree of the first twisting bundle"},
                   {"d2", "degree of the second twisting bundle"},
                   {"format", "text or json"}});

  Subcommand series;
  series.app = app.add_subcommand("series", "closed-form generating function");
  add_keys(series, {{"v", "framing, 1 or 2"},
                    {"genus", "curve genus"},
                    {"d1", "degree of the first twisting bundle"},
                    {"d2", "degree of the second twisting bundle"},
                    {"umax", "largest power of u"},
                    {"qmax", "largest power of q"},
                    {"format", "text or json"}});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv.app->parsed()) return cmd_invariants(resolve(inv), out, log);
    if (ver.app->parsed()) return cmd_verify(resolve(ver), out, log);
    if (walls.app->parsed()) return cmd_walls(resolve(walls), out, log);
    if (series.app->parsed()) return cmd_series(resolve(series), out, log);
  } catch (const UsageError& e) {
    log.error(e.what());
    err << "Run with --help for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    log.error(e.what());
    return 2;
  }
  return 2;
}

}  // namespace adhm::cli
