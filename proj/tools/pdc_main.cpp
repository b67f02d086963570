// pdc: command-line front end for the cavity down-conversion simulator.
//
// Scenarios sweep the lossless interaction parameter, integrate the lossy
// cavity, tabulate correlator ratios or entanglement thresholds, and run
// the cross-oracle selfcheck. Output is CSV (12 significant digits, with
// the resolved configuration echoed as `#` comments) plus optional SVG.
//
// Exit codes: 0 success, 1 configuration error, 2 accuracy/self-check
// failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdc/criteria.hpp"
#include "pdc/dynamics.hpp"
#include "pdc/selfcheck.hpp"
#include "pdc/svg.hpp"
#include "pdc/table.hpp"

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KeyValue {
  std::string value;
  std::string origin;  // "file:line" or "flag" for error messages
  bool consumed = false;
};

// Flat key=value configuration collected from the optional config file and
// command-line overrides (the latter win).
class RunConfig {
 public:
  void set(const std::string& key, const std::string& value,
           const std::string& origin) {
    entries_[key] = {value, origin, false};
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    it->second.consumed = true;
    return it->second.value;
  }

  double get_double(const std::string& key, double fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    it->second.consumed = true;
    return parse_double(it->second);
  }

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    it->second.consumed = true;
    std::size_t pos = 0;
    try {
      const std::uint64_t v = std::stoull(it->second.value, &pos);
      if (pos != it->second.value.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError(it->second.origin + ": key '" + key +
                        "' expects an unsigned integer, got '" +
                        it->second.value + "'");
    }
  }

  int get_int(const std::string& key, int fallback) {
    const double v = get_double(key, fallback);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
      throw ConfigError(origin_of(key) + ": key '" + key +
                        "' expects an integer");
    }
    return static_cast<int>(v);
  }

  bool get_flag(const std::string& key, bool fallback) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    it->second.consumed = true;
    const std::string& v = it->second.value;
    if (v == "1" || v == "true" || v == "on") return true;
    if (v == "0" || v == "false" || v == "off") return false;
    throw ConfigError(it->second.origin + ": key '" + key +
                      "' expects a boolean (0/1/true/false)");
  }

  // Flags nobody read are almost always typos; reject them.
  void reject_unconsumed() const {
    for (const auto& [key, kv] : entries_) {
      if (!kv.consumed) {
        throw ConfigError(kv.origin + ": unknown key '" + key +
                          "' for this scenario");
      }
    }
  }

  // The resolved configuration echoed into output headers.
  std::vector<std::string> echo(const std::string& scenario) const {
    std::vector<std::string> out;
    out.push_back("scenario=" + scenario);
    for (const auto& [key, kv] : entries_) {
      out.push_back(key + "=" + kv.value);
    }
    return out;
  }

 private:
  std::string origin_of(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? "default" : it->second.origin;
  }

  double parse_double(const KeyValue& kv) {
    std::size_t pos = 0;
    try {
      const double v = std::stod(kv.value, &pos);
      if (pos != kv.value.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError(kv.origin + ": expected a number, got '" + kv.value +
                        "'");
    }
  }

  std::map<std::string, KeyValue> entries_;
};

void load_config_file(const std::string& path, RunConfig* cfg) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto origin = path + ":" + std::to_string(lineno);
    std::string stripped;
    for (char c : line) {
      if (c == '#') break;
      stripped += c;
    }
    // Trim whitespace.
    const auto b = stripped.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = stripped.find_last_not_of(" \t\r");
    stripped = stripped.substr(b, e - b + 1);
    const auto eq = stripped.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError(origin + ": expected key=value, got '" + stripped +
                        "'");
    }
    auto trim = [](std::string s) {
      const auto b2 = s.find_first_not_of(" \t");
      if (b2 == std::string::npos) return std::string();
      const auto e2 = s.find_last_not_of(" \t");
      return s.substr(b2, e2 - b2 + 1);
    };
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(origin + ": empty key or value");
    }
    cfg->set(key, value, origin);
  }
}

// ---------------------------------------------------------------------------
// Scenario implementations.

// Ratio with the quantum-vacuum limit: sweeps may touch <N> = 0 points
// (n0 = 0), where the pointwise ratio is undefined and the closed-form
// limit 0 is emitted instead.
double ratio_or_limit(const pdc::GaussianMoments& g) {
  if (pdc::total_number(g) <= 0.0) return 0.0;
  return pdc::separability_ratio(g).ratio;
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw ConfigError("grid needs at least 1 point");
  if (points == 1) return {lo};
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return g;
}

struct ScenarioOutput {
  pdc::Table table;
  pdc::ChartSpec chart;
  std::optional<pdc::Table> chart_table;  // pivoted data when the CSV layout
                                          // is not directly plottable
};

ScenarioOutput run_steady(RunConfig& cfg) {
  const std::string sweep = cfg.get_string("sweep", "r");
  if (sweep != "r" && sweep != "n0") {
    throw ConfigError("steady: sweep must be 'r' or 'n0'");
  }
  const double n0 = cfg.get_double("n0", 0.3);
  const double r_fixed = cfg.get_double("r", 1.0);
  const bool sweep_r = sweep == "r";
  const double lo = cfg.get_double("min", 0.0);
  const double hi = cfg.get_double("max", sweep_r ? 4.0 : 2.0);
  const int points = cfg.get_int("points", 81);
  // Classical companion occupation; defaults to the vacuum-matched n0 + 1/2.
  const double n0c_off = cfg.get_double("n0c_offset", 0.5);

  ScenarioOutput out;
  out.table.columns = {sweep,        "n_quantum",     "n_classical",
                       "A_quantum",  "A_classical",   "ratio_quantum",
                       "ratio_classical", "entangled"};
  for (const double x : linspace(lo, hi, points)) {
    const double r = sweep_r ? x : r_fixed;
    const double n0_q = sweep_r ? n0 : x;
    const pdc::SteadyParams pq{r, n0_q, pdc::StatKind::Quantum};
    const pdc::SteadyParams pc{r, n0_q + n0c_off, pdc::StatKind::Classical};
    const pdc::GaussianMoments gq = pdc::evolve_lossless(pq);
    const pdc::GaussianMoments gc = pdc::evolve_lossless(pc);
    const double ratio_q = ratio_or_limit(gq);
    const double ratio_c = ratio_or_limit(gc);
    const int ah = pdc::kModeAh.flat(), bv = pdc::kModeBv.flat();
    out.table.add_row({x, static_cast<double>(gq.normal(0, 0).real()),
                       static_cast<double>(gc.normal(0, 0).real()),
                       static_cast<double>(gq.anomalous(ah, bv).real()),
                       static_cast<double>(gc.anomalous(ah, bv).real()),
                       ratio_q, ratio_c, ratio_q < 0.5 ? 1.0 : 0.0});
  }
  out.chart = {0, {5, 6}, "separability ratio vs " + sweep};
  return out;
}

ScenarioOutput run_lossy(RunConfig& cfg) {
  pdc::LossyParams p;
  p.kappa0 = cfg.get_double("kappa0", 1.0);
  p.Lambda = cfg.get_double("Lambda", 0.1);
  p.lambda = cfg.get_double("lambda", 0.1);
  p.n0 = cfg.get_double("n0", 0.3);
  p.t_max = cfg.get_double("t_max", 50.0);
  p.dt = cfg.get_double("dt", 1e-3);
  const double n0c = cfg.get_double("n0c", p.n0 + 0.5);
  const int out_points = cfg.get_int("out_points", 501);

  p.stat = pdc::StatKind::Quantum;
  const pdc::MomentTrajectory quantum = pdc::evolve_lossy(p);
  pdc::LossyParams pc = p;
  pc.stat = pdc::StatKind::Classical;
  pc.n0 = n0c;
  const pdc::MomentTrajectory classical = pdc::evolve_lossy(pc);

  ScenarioOutput out;
  out.table.columns = {"t",       "delta_eff", "n_q",      "n_c",
                       "ratio_q", "ratio_c",   "total_n_q"};
  const std::size_t last = quantum.size() - 1;
  for (const double frac : linspace(0.0, 1.0, out_points)) {
    const auto k = static_cast<std::size_t>(std::llround(frac * last));
    const pdc::GaussianMoments gq = quantum.moments_at(k);
    const pdc::GaussianMoments gc = classical.moments_at(k);
    out.table.add_row({quantum.time[k], pdc::delta_kernel(p, quantum.time[k], 0.0),
                       quantum.occupation[k], classical.occupation[k],
                       ratio_or_limit(gq), ratio_or_limit(gc),
                       pdc::total_number(gq)});
  }
  out.chart = {0, {4, 5}, "separability ratio vs time"};
  return out;
}

ScenarioOutput run_correlators(RunConfig& cfg) {
  const double n0 = cfg.get_double("n0", 0.0);
  const int n_min = cfg.get_int("n_min", 1);
  const int n_max = cfg.get_int("n_max", 6);
  const double lo = cfg.get_double("min", 0.5);
  const double hi = cfg.get_double("max", 4.0);
  const int points = cfg.get_int("points", 36);
  if (n_min < 1 || n_max < n_min) {
    throw ConfigError("correlators: need 1 <= n_min <= n_max");
  }
  if (2 * n_max > static_cast<int>(pdc::kMaxWickFactors)) {
    throw ConfigError("correlators: n_max exceeds the order-" +
                      std::to_string(pdc::kMaxWickFactors / 2) +
                      " correlator cap");
  }

  const std::vector<double> grid = linspace(lo, hi, points);
  ScenarioOutput out;
  out.table.columns = {"r", "n", "ratio_qc"};

  pdc::Table pivot;
  pivot.columns = {"r"};
  std::vector<std::vector<double>> series;
  for (int n = n_min; n <= n_max; ++n) {
    // Balanced member of the order-n family: half the quanta on a_h,
    // half on b_v (the strongest cross-arm channel).
    const int k = (n + 1) / 2;
    const pdc::CorrelatorSpec spec{n, k, k, k};
    const pdc::SteadyParams pq{0.0, n0, pdc::StatKind::Quantum};
    series.push_back({});
    for (const auto& [r, ratio] : pdc::qc_ratio(spec, pq, grid)) {
      out.table.add_row({r, static_cast<double>(n), ratio});
      series.back().push_back(ratio);
    }
    pivot.columns.push_back("n=" + std::to_string(n));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (const auto& s : series) row.push_back(s[i]);
    pivot.rows.push_back(std::move(row));
  }

  out.chart = {0, {}, "quantum/classical correlator ratio vs r"};
  out.chart_table = std::move(pivot);
  return out;
}

ScenarioOutput run_threshold(RunConfig& cfg) {
  const double lo = cfg.get_double("min", 0.0);
  const double hi = cfg.get_double("max", 10.0);
  const int points = cfg.get_int("points", 101);

  ScenarioOutput out;
  out.table.columns = {"n0", "r_star"};
  for (const double n0 : linspace(lo, hi, points)) {
    out.table.add_row({n0, pdc::entanglement_threshold(n0)});
  }
  out.chart = {0, {1}, "entanglement threshold r* vs n0"};
  return out;
}

int run_selfcheck_scenario(RunConfig& cfg, std::uint64_t seed) {
  cfg.reject_unconsumed();
  const auto results = pdc::run_selfcheck(seed);
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " -- "
              << r.detail << "\n";
    all_ok = all_ok && r.passed;
  }
  std::cout << (all_ok ? "selfcheck: all suites passed\n"
                       : "selfcheck: FAILURES detected\n");
  return all_ok ? 0 : 2;
}

void print_usage(std::ostream& os) {
  os << "usage: pdc --scenario <steady|lossy|correlators|threshold|selfcheck>\n"
        "           [--config <file>] [--out <path>] [--plot] [--seed <u64>]\n"
        "           [--<key> <value> ...]\n"
        "\n"
        "Config is flat key=value (file first, then flag overrides).\n"
        "Common keys: out, plot, seed.\n"
        "  steady:      sweep (r|n0), min, max, points, n0, r, n0c_offset\n"
        "  lossy:       kappa0, Lambda, lambda, n0, n0c, t_max, dt, out_points\n"
        "  correlators: n0, n_min, n_max, min, max, points\n"
        "  threshold:   min, max, points\n"
        "  selfcheck:   seed\n"
        "\n"
        "CSV goes to --out (default <scenario>.csv); --plot adds an SVG line\n"
        "chart next to it. Exit codes: 0 ok, 1 config error, 2 accuracy "
        "failure.\n";
}

int run_cli(int argc, char** argv) {
  std::string scenario;
  std::string config_path;
  RunConfig cfg;

  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--help" || arg == "-h") {
      print_usage(std::cout);
      return 0;
    }
    if (arg.rfind("--", 0) != 0) {
      throw ConfigError("flag expected, got '" + arg + "' (see --help)");
    }
    const std::string key = arg.substr(2);
    if (key == "plot") {
      cfg.set("plot", "1", "flag --plot");
      continue;
    }
    if (i + 1 >= argc) {
      throw ConfigError("flag --" + key + " needs a value");
    }
    const std::string value = argv[++i];
    if (key == "scenario") {
      scenario = value;
    } else if (key == "config") {
      config_path = value;
    } else {
      // Collected later than the file so flags win; origin notes the flag.
      cfg.set(key, value, "flag --" + key);
    }
  }

  if (!config_path.empty()) {
    RunConfig from_file;
    load_config_file(config_path, &from_file);
    // Merge: file entries first, existing flag entries override.
    RunConfig merged = from_file;
    for (const auto& line : cfg.echo("")) {
      const auto eq = line.find('=');
      const std::string k = line.substr(0, eq);
      if (k == "scenario") continue;
      merged.set(k, line.substr(eq + 1), "flag --" + k);
    }
    cfg = std::move(merged);
  }
  // A scenario key in the file is honored unless the flag overrides it.
  const std::string file_scenario = cfg.get_string("scenario", "");
  if (scenario.empty()) scenario = file_scenario;
  if (scenario.empty()) {
    print_usage(std::cerr);
    throw ConfigError("--scenario is required");
  }

  const std::uint64_t seed = cfg.get_u64("seed", 1);
  const std::string out_path = cfg.get_string("out", scenario + ".csv");
  const bool plot = cfg.get_flag("plot", false);

  if (scenario == "selfcheck") {
    return run_selfcheck_scenario(cfg, seed);
  }

  ScenarioOutput result;
  if (scenario == "steady") {
    result = run_steady(cfg);
  } else if (scenario == "lossy") {
    result = run_lossy(cfg);
  } else if (scenario == "correlators") {
    result = run_correlators(cfg);
  } else if (scenario == "threshold") {
    result = run_threshold(cfg);
  } else {
    throw ConfigError("unknown scenario '" + scenario +
                      "' (steady|lossy|correlators|threshold|selfcheck)");
  }
  cfg.reject_unconsumed();

  result.table.comments = cfg.echo(scenario);
  result.table.comments.push_back("out=" + out_path);
  pdc::write_csv_file(out_path, result.table);
  std::cout << "wrote " << out_path << " (" << result.table.rows.size()
            << " rows)\n";

  if (plot) {
    std::string svg_path = out_path;
    const auto dot = svg_path.rfind(".csv");
    if (dot != std::string::npos && dot == svg_path.size() - 4) {
      svg_path = svg_path.substr(0, dot);
    }
    svg_path += ".svg";
    const pdc::Table& plot_table =
        result.chart_table ? *result.chart_table : result.table;
    pdc::write_svg_file(svg_path, plot_table, result.chart);
    std::cout << "wrote " << svg_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::length_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    // Accuracy failures (integrator self-test, quadrature convergence).
    std::cerr << "accuracy error: " << e.what() << "\n";
    return 2;
  }
}
