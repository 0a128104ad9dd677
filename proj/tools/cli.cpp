#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "budget_builder/detect.hpp"
#include "budget_builder/edge_list.hpp"
#include "budget_builder/errors.hpp"
#include "budget_builder/experiments.hpp"
#include "budget_builder/threshold.hpp"

namespace bb::cli {

namespace {

const char* const kSwitches[] = {"no-early-stop", "diagnostics", "append"};

bool is_switch(const std::string& key) {
  return std::find(std::begin(kSwitches), std::end(kSwitches), key) !=
         std::end(kSwitches);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct CommonOptions {
  std::string target = "k4m";
  int k = 2;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 1;
  unsigned jobs = 0;
  std::string out;
  bool no_early_stop = false;
  bool diagnostics = false;
  bool append = false;
};

struct OverrideOptions {
  std::optional<std::string> strategy;
  std::optional<std::uint32_t> r;
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> phase_length;
  std::optional<std::uint64_t> initial_budget;
  std::optional<std::uint64_t> round_budget;

  StrategyOverrides resolve() const {
    StrategyOverrides o;
    if (strategy) o.kind = parse_strategy_kind(*strategy);
    o.seed_set_size = r;
    o.per_vertex_cap = cap;
    o.phase_length = phase_length;
    o.initial_budget = initial_budget;
    o.round_budget = round_budget;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonOptions& c, bool with_target) {
  if (with_target) {
    cmd->add_option("--target", c.target, "k4m, tk, tk:K or triangle");
    cmd->add_option("--k", c.k, "fan size for --target tk")->check(CLI::Range(1, 64));
  }
  cmd->add_option("--seed", c.seed, "master seed (default: $BB_SEED, else 0)");
  cmd->add_option("--trials", c.trials, "trials per cell")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", c.jobs, "worker threads (0 = all cores)");
  cmd->add_option("--out", c.out, "CSV output path");
  cmd->add_flag("--no-early-stop", c.no_early_stop, "keep running after a hit");
  cmd->add_flag("--diagnostics", c.diagnostics, "print per-phase statistics");
  cmd->add_flag("--append", c.append, "append rows instead of rewriting");
}

void add_overrides(CLI::App* cmd, OverrideOptions& o) {
  cmd->add_option("--strategy", o.strategy, "force a strategy by name");
  cmd->add_option("--r", o.r, "seed-set size |R|");
  cmd->add_option("--cap", o.cap, "first-phase purchases per seed vertex");
  cmd->add_option("--phase-length", o.phase_length, "phase length T");
  cmd->add_option("--initial-budget", o.initial_budget, "first-phase budget");
  cmd->add_option("--round-budget", o.round_budget, "budget per later phase");
}

std::uint64_t resolve_seed(const CommonOptions& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("BB_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("BB_SEED is not an unsigned integer: '" + std::string(env) + "'");
  }
  return 0;
}

Pattern resolve_target(const CommonOptions& c) {
  if (c.target == "tk") return Pattern::fan(c.k);
  return parse_pattern(c.target);
}

BatchOptions batch_options(const CommonOptions& c) {
  BatchOptions o;
  o.jobs = c.jobs;
  o.early_stop = !c.no_early_stop;
  return o;
}

// Opens `path` for writing; with append, keeps existing rows and only writes
// the header block into an empty file. Returns whether the header is needed.
bool open_csv(std::ofstream& file, const std::string& path, bool append) {
  namespace fs = std::filesystem;
  const bool fresh =
      !append || !fs::exists(path) || fs::file_size(path) == 0;
  file.open(path, fresh ? std::ios::trunc : std::ios::app);
  if (!file) throw ConfigError("--out: cannot write '" + path + "'");
  return fresh;
}

std::uint64_t exponent_value(std::uint32_t n, double e) {
  return static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), e)));
}

void print_phase_stats(std::ostream& out, const BatchResult& batch) {
  if (batch.trials.empty()) return;
  std::map<std::string, double> sums;
  std::vector<std::string> order;
  for (const auto& tr : batch.trials) {
    for (const auto& [key, value] : tr.phase_stats) {
      if (!sums.count(key)) order.push_back(key);
      sums[key] += static_cast<double>(value);
    }
  }
  out << "  max edges bought: " << batch.max_edges_bought << '\n';
  for (const auto& key : order) {
    out << "  mean " << key << ": "
        << sums[key] / static_cast<double>(batch.trials.size()) << '\n';
  }
}

std::vector<std::uint32_t> parse_n_list(const std::vector<std::uint32_t>& given,
                                        const char* flag) {
  if (given.empty()) throw ConfigError(std::string(flag) + ": at least one n required");
  for (auto n : given) {
    if (n < 2) throw ConfigError(std::string(flag) + ": n must be at least 2");
  }
  return given;
}

int cmd_run(const CommonOptions& c, const OverrideOptions& o, std::uint32_t n,
            std::optional<std::uint64_t> t, std::optional<double> t_exp,
            std::optional<std::uint64_t> b, std::optional<double> b_exp,
            std::ostream& out) {
  if (t.has_value() == t_exp.has_value()) {
    throw ConfigError("--t: give exactly one of --t and --t-exp");
  }
  if (b.has_value() == b_exp.has_value()) {
    throw ConfigError("--b: give exactly one of --b and --b-exp");
  }
  const Pattern target = resolve_target(c);
  ProcessConfig config{n, t ? *t : exponent_value(n, *t_exp),
                       b ? *b : exponent_value(n, *b_exp), resolve_seed(c)};
  validate(config);
  const auto spec = select_strategy(target, n, config.t, config.b, o.resolve());
  const auto batch = run_trials(config, spec, target, c.trials, batch_options(c));

  const std::string path = c.out.empty() ? "trials.csv" : c.out;
  std::ofstream file;
  // Rows always accumulate in run mode.
  if (open_csv(file, path, true)) {
    write_csv_header(file, config.seed);
    write_trials_columns(file);
  }
  write_trials_rows(file, {target, config, strategy_name(spec.kind)}, batch);

  const auto& est = batch.estimate;
  char buf[160];
  std::snprintf(buf, sizeof buf, "p_hat=%.4f ci=[%.4f, %.4f]", est.p_hat,
                est.ci_low, est.ci_high);
  out << pattern_name(target) << " n=" << n << " t=" << config.t
      << " b=" << config.b << " strategy=" << strategy_name(spec.kind)
      << " trials=" << est.trials << " successes=" << est.successes << ' '
      << buf << '\n';
  if (c.diagnostics) print_phase_stats(out, batch);
  return kExitOk;
}

struct GridFlags {
  std::vector<std::uint32_t> n_list;
  double x_min = 1.0, x_max = 2.0, x_step = 0.1;
  double y_min = 0.0, y_max = 1.5, y_step = 0.1;
};

std::vector<double> checked_grid(double lo, double hi, double step,
                                 const std::string& axis, double bound_lo,
                                 double bound_hi) {
  if (lo > hi) throw ConfigError("--" + axis + "-min exceeds --" + axis + "-max");
  if (!(step > 0)) throw ConfigError("--" + axis + "-step must be positive");
  if (lo < bound_lo - 1e-12 || hi > bound_hi + 1e-12) {
    std::ostringstream msg;
    msg << "--" << axis << "-min/--" << axis << "-max must lie in [" << bound_lo
        << ", " << bound_hi << "]";
    throw ConfigError(msg.str());
  }
  return exponent_grid(lo, hi, step);
}

int cmd_sweep(const CommonOptions& c, const GridFlags& g, std::ostream& out) {
  const auto n_list = parse_n_list(g.n_list, "--n-list");
  const auto xs = checked_grid(g.x_min, g.x_max, g.x_step, "x", 1.0, 2.0);
  const auto ys = checked_grid(g.y_min, g.y_max, g.y_step, "y", 0.0, 1.5);
  const Pattern target = resolve_target(c);
  const auto seed = resolve_seed(c);
  const auto points = sweep_grid(target, n_list, xs, ys, c.trials, seed, batch_options(c));

  const std::string path = c.out.empty() ? "sweep.csv" : c.out;
  std::ofstream file;
  if (open_csv(file, path, c.append)) {
    write_csv_header(file, seed);
    write_sweep_columns(file);
  }
  write_sweep_rows(file, points);

  out << pattern_name(target) << ": " << points.size() << " cells, "
      << c.trials << " trials each\n";
  for (const double x : xs) {
    const auto y_hat = estimate_crossover(points, x);
    char buf[160];
    if (y_hat) {
      std::snprintf(buf, sizeof buf, "x=%.4g  y_hat=%.4f  predicted=%.4f", x,
                    *y_hat, predicted_y_star(target, x));
    } else {
      std::snprintf(buf, sizeof buf, "x=%.4g  y_hat=n/a  predicted=%.4f", x,
                    predicted_y_star(target, x));
    }
    out << buf << '\n';
  }
  if (c.diagnostics) {
    for (const auto& p : points) {
      out << "  n=" << p.n << " x=" << p.x << " y=" << p.y << " t=" << p.t
          << " b=" << p.b << " " << p.strategy << " p_hat=" << p.estimate.p_hat
          << (p.t_clamped ? " (t clamped)" : "") << '\n';
    }
  }
  return kExitOk;
}

struct ProbeFlags {
  std::string adversary = "degree-greedy";
  std::vector<std::uint32_t> n_list;
  std::optional<double> t_exp, b_exp;
  std::optional<std::uint64_t> t, b;
};

int cmd_probe(const CommonOptions& c, const ProbeFlags& p, std::ostream& out) {
  const auto n_list = parse_n_list(p.n_list, "--n-list");
  if (p.t.has_value() == p.t_exp.has_value()) {
    throw ConfigError("--t-exp: give exactly one of --t and --t-exp");
  }
  if (p.b.has_value() == p.b_exp.has_value()) {
    throw ConfigError("--b-exp: give exactly one of --b and --b-exp");
  }
  const auto adversary = parse_adversary(p.adversary);
  const auto seed = resolve_seed(c);

  std::vector<ProbeRecord> all;
  for (const auto n : n_list) {
    const auto t = p.t ? *p.t : exponent_value(n, *p.t_exp);
    const auto b = p.b ? *p.b : exponent_value(n, *p.b_exp);
    auto recs = probe_counts(n, t, b, adversary, c.trials, seed, batch_options(c));
    all.insert(all.end(), recs.begin(), recs.end());
  }

  const std::string path = c.out.empty() ? "probe.csv" : c.out;
  std::ofstream file;
  if (open_csv(file, path, c.append)) {
    write_csv_header(file, seed);
    write_probe_columns(file);
  }
  write_probe_rows(file, all);

  const auto summary = summarize_probes(all);
  std::vector<double> lx, ly;
  for (const auto& s : summary) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "n=%u t=%llu b=%llu mean_triangles=%.3f scale_tri=%.3f "
                  "k3plus/triangle=%.3f",
                  s.n, static_cast<unsigned long long>(s.t),
                  static_cast<unsigned long long>(s.b), s.mean_triangles,
                  s.scale_tri,
                  s.mean_triangles > 0 ? s.mean_k3plus / s.mean_triangles : 0.0);
    out << buf << '\n';
    if (s.mean_triangles > 0 && s.scale_tri > 0) {
      lx.push_back(std::log(s.scale_tri));
      ly.push_back(std::log(s.mean_triangles));
    }
  }
  if (lx.size() >= 2) {
    try {
      out << "log-log slope (triangles vs b t^2/n^3): " << ols_slope(lx, ly) << '\n';
    } catch (const ConfigError&) {
      // Identical scales across the sweep: no slope to report.
    }
  }
  return kExitOk;
}

int cmd_detect(const std::string& graph_path, const std::string& pattern,
               std::ostream& out) {
  const Pattern p = parse_pattern(pattern);
  const auto g = read_edge_list_file(graph_path);
  out << (contains_pattern(g, p) ? "true" : "false") << '\n';
  return kExitOk;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config: missing file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  return path ? merge_config_file(rest, *path) : rest;
}

int dispatch(const std::vector<std::string>& raw, std::ostream& out) {
  const auto args = expand_config(raw);

  CLI::App app{"budget-builder: online builder strategies for the (t, b) random graph process"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("budget-builder ") + kVersion);

  CommonOptions run_c, sweep_c, probe_c;
  OverrideOptions run_o;

  auto* run = app.add_subcommand("run", "repeated trials at one (n, t, b)");
  add_common(run, run_c, true);
  add_overrides(run, run_o);
  std::uint32_t run_n = 0;
  std::optional<std::uint64_t> run_t, run_b;
  std::optional<double> run_t_exp, run_b_exp;
  run->add_option("--n", run_n, "vertices")->required();
  run->add_option("--t", run_t, "edges revealed");
  run->add_option("--b", run_b, "budget");
  run->add_option("--t-exp", run_t_exp, "t = round(n^X)");
  run->add_option("--b-exp", run_b_exp, "b = round(n^Y)");

  auto* sweep = app.add_subcommand("sweep", "phase diagram over (log_n t, log_n b)");
  add_common(sweep, sweep_c, true);
  GridFlags grid;
  sweep->add_option("--n-list", grid.n_list, "comma-separated n values")
      ->delimiter(',')
      ->required();
  sweep->add_option("--x-min", grid.x_min);
  sweep->add_option("--x-max", grid.x_max);
  sweep->add_option("--x-step", grid.x_step);
  sweep->add_option("--y-min", grid.y_min);
  sweep->add_option("--y-max", grid.y_max);
  sweep->add_option("--y-step", grid.y_step);

  auto* probe = app.add_subcommand("probe", "pattern counts of an adversarial builder");
  add_common(probe, probe_c, false);
  ProbeFlags pf;
  probe->add_option("--adversary", pf.adversary, "degree-greedy or buy-all-prefix");
  probe->add_option("--n-list", pf.n_list, "comma-separated n values")
      ->delimiter(',')
      ->required();
  probe->add_option("--t-exp", pf.t_exp, "t = round(n^X)");
  probe->add_option("--b-exp", pf.b_exp, "b = round(n^Y)");
  probe->add_option("--t", pf.t, "absolute t");
  probe->add_option("--b", pf.b, "absolute b");

  auto* detect = app.add_subcommand("detect", "pattern containment in an edge list");
  std::string graph_path, pattern_text;
  detect->add_option("--graph", graph_path, "edge list file")->required();
  detect->add_option("--pattern", pattern_text, "k4m, tk:K, triangle, c4, k3plus, ...")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "budget-builder " << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  if (*run) return cmd_run(run_c, run_o, run_n, run_t, run_t_exp, run_b, run_b_exp, out);
  if (*sweep) return cmd_sweep(sweep_c, grid, out);
  if (*probe) return cmd_probe(probe_c, pf, out);
  return cmd_detect(graph_path, pattern_text, out);
}

}  // namespace

std::vector<std::string> merge_config_file(const std::vector<std::string>& args,
                                           const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config: cannot open '" + path + "'");
  std::vector<std::string> merged = args;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--config: line " + std::to_string(lineno) + " is not key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    if (is_switch(key)) {
      if (value == "true" || value == "1") {
        merged.push_back(flag);
      } else if (value != "false" && value != "0") {
        throw ConfigError("--config: " + key + " expects true or false");
      }
    } else {
      merged.push_back(flag);
      merged.push_back(value);
    }
  }
  return merged;
}

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out,
                       std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_and_dispatch(args, out, err);
}

}  // namespace bb::cli
