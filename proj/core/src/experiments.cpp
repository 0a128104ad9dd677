#include "budget_builder/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <thread>

#include "budget_builder/detect.hpp"
#include "budget_builder/errors.hpp"
#include "budget_builder/threshold.hpp"

namespace bb {

namespace {

unsigned resolve_jobs(unsigned jobs, std::uint64_t work) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(work, 1)));
}

// Runs body(i) for i in [0, count) on `jobs` threads. Each index writes only
// its own slot, so results are independent of scheduling. The exception from
// the lowest failing index is rethrown.
void parallel_for(std::uint64_t count, unsigned jobs,
                  const std::function<void(std::uint64_t)>& body) {
  jobs = resolve_jobs(jobs, count);
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        failed.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

BatchResult run_batch(const ProcessConfig& base, const StrategySpec& spec,
                      const Pattern& target, std::uint64_t trials,
                      const std::function<std::uint64_t(std::uint64_t)>& seed_of,
                      const BatchOptions& options) {
  if (trials == 0) throw ConfigError("trials must be at least 1");
  validate(base);
  const TargetDetector detector(target);
  BatchResult result;
  result.trials.resize(trials);

  parallel_for(trials, options.jobs, [&](std::uint64_t i) {
    ProcessConfig cfg = base;
    cfg.seed = seed_of(i);
    auto strategy = make_strategy(spec, cfg);
    RunOptions run_opts;
    run_opts.early_stop = options.early_stop;
    TrialRecord rec;
    try {
      rec = run_strategy(cfg, *strategy, &detector, run_opts);
    } catch (const ContractViolation& err) {
      throw ContractViolation(std::string(err.what()) + " [trial " +
                              std::to_string(i) + ", seed " +
                              std::to_string(cfg.seed) + ", n=" +
                              std::to_string(cfg.n) + " t=" + std::to_string(cfg.t) +
                              " b=" + std::to_string(cfg.b) + "]");
    }
    if (rec.edges_bought > cfg.b) {
      throw ContractViolation("trial overspent its budget");
    }
    auto& s = result.trials[i];
    s.seed = cfg.seed;
    s.success = rec.success;
    s.hit_time = rec.hit_time;
    s.edges_bought = rec.edges_bought;
    s.phase_stats = std::move(rec.phase_stats);
  });

  std::uint64_t successes = 0;
  for (const auto& s : result.trials) {
    successes += s.success ? 1 : 0;
    result.max_edges_bought = std::max(result.max_edges_bought, s.edges_bought);
  }
  result.estimate = wilson_estimate(successes, trials);
  return result;
}

}  // namespace

BatchResult run_trials(const ProcessConfig& config, const StrategySpec& strategy,
                       const Pattern& target, std::uint64_t trials,
                       const BatchOptions& options) {
  const auto master = config.seed;
  return run_batch(config, strategy, target, trials,
                   [master](std::uint64_t i) { return master + i; }, options);
}

std::vector<double> exponent_grid(double lo, double hi, double step) {
  if (!(step > 0)) throw ConfigError("grid step must be positive");
  if (lo > hi) throw ConfigError("grid minimum exceeds maximum");
  const auto count = static_cast<std::uint64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    // Snap to 1e-9 so 0.1 steps give the same doubles as typed literals.
    grid.push_back(std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9);
  }
  return grid;
}

std::vector<PhasePoint> sweep_grid(const Pattern& target,
                                   std::span<const std::uint32_t> n_list,
                                   std::span<const double> x_grid,
                                   std::span<const double> y_grid,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const BatchOptions& options) {
  std::vector<PhasePoint> points;
  for (const auto n : n_list) {
    for (const double x : x_grid) {
      for (const double y : y_grid) {
        PhasePoint pt;
        pt.target = target;
        pt.n = n;
        pt.x = x;
        pt.y = y;
        const double nd = static_cast<double>(n);
        const auto nominal_t = std::llround(std::pow(nd, x));
        const auto pairs = pair_count(n);
        pt.t = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max<long long>(nominal_t, 1)), 1, pairs);
        pt.t_clamped = static_cast<std::uint64_t>(nominal_t) > pairs;
        pt.b = static_cast<std::uint64_t>(std::llround(std::pow(nd, y)));
        pt.predicted_y_star = predicted_y_star(target, x);

        const auto spec = select_strategy(target, n, pt.t, pt.b);
        pt.strategy = strategy_name(spec.kind);
        const auto cell = derive_seed({seed, n, std::bit_cast<std::uint64_t>(x),
                                       std::bit_cast<std::uint64_t>(y)});
        ProcessConfig cfg{n, pt.t, pt.b, cell};
        pt.estimate =
            run_batch(cfg, spec, target, trials,
                      [cell](std::uint64_t i) { return derive_seed({cell, i}); },
                      options)
                .estimate;
        points.push_back(std::move(pt));
      }
    }
  }
  return points;
}

std::optional<double> estimate_crossover(std::span<const PhasePoint> points,
                                         double x) {
  // Pool all n at this x; equal y across n are merged by weight.
  std::map<double, std::pair<double, double>> by_y;  // y -> (successes, trials)
  for (const auto& p : points) {
    if (std::abs(p.x - x) > 1e-9) continue;
    auto& acc = by_y[p.y];
    acc.first += static_cast<double>(p.estimate.successes);
    acc.second += static_cast<double>(p.estimate.trials);
  }
  std::vector<CurveSample> samples;
  for (const auto& [y, acc] : by_y) {
    if (acc.second > 0) samples.push_back({y, acc.first / acc.second, acc.second});
  }
  return crossover_y(std::move(samples));
}

std::string adversary_name(Adversary a) {
  return a == Adversary::DegreeGreedy ? "degree-greedy" : "buy-all-prefix";
}

Adversary parse_adversary(const std::string& text) {
  if (text == "degree-greedy") return Adversary::DegreeGreedy;
  if (text == "buy-all-prefix") return Adversary::BuyAllPrefix;
  throw ConfigError("unknown adversary '" + text + "'");
}

std::vector<ProbeRecord> probe_counts(std::uint32_t n, std::uint64_t t,
                                      std::uint64_t b, Adversary adversary,
                                      std::uint64_t trials, std::uint64_t seed,
                                      const BatchOptions& options) {
  if (trials == 0) throw ConfigError("trials must be at least 1");
  validate(ProcessConfig{n, t, b, seed});
  const StrategySpec spec =
      adversary == Adversary::DegreeGreedy
          ? make_spec(StrategyKind::DegreeGreedy, n, t, b, 1)
          : StrategySpec{StrategyKind::BuyAll, default_params(StrategyKind::BuyAll, n, t, b)};

  const double nd = n, td = static_cast<double>(t), bd = static_cast<double>(b);
  std::vector<ProbeRecord> records(trials);
  parallel_for(trials, options.jobs, [&](std::uint64_t i) {
    ProcessConfig cfg{n, t, b, derive_seed({seed, n, t, b, i})};
    auto strategy = make_strategy(spec, cfg);
    RunOptions run_opts;
    run_opts.early_stop = false;
    auto rec = run_strategy(cfg, *strategy, nullptr, run_opts);
    const auto& g = rec.purchased;

    auto& r = records[i];
    r.n = n;
    r.t = t;
    r.b = b;
    r.adversary = adversary;
    r.seed = cfg.seed;
    r.triangles = count_pattern(g, Pattern::triangle());
    r.c4 = count_pattern(g, Pattern::c4());
    r.k3plus = count_pattern(g, Pattern::k3_plus());
    r.p4 = count_pattern(g, Pattern::p4());
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) < 2) continue;
      const int m = link_matching_size(g, v, 3);
      for (int l = 0; l < m; ++l) ++r.tl_centers[l];
    }
    r.scale_tri = bd * td * td / (nd * nd * nd);
    r.scale_c4 = bd * td * td * td / (nd * nd * nd * nd);
    r.scale_p4 = bd * td * td / (nd * nd);
  });
  return records;
}

std::vector<ProbeSummary> summarize_probes(std::span<const ProbeRecord> records) {
  std::vector<ProbeSummary> out;
  std::vector<std::uint64_t> counts;
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ProbeSummary& s) {
      return s.n == r.n && s.t == r.t && s.b == r.b;
    });
    if (it == out.end()) {
      out.push_back({r.n, r.t, r.b, 0.0, 0.0, r.scale_tri});
      counts.push_back(0);
      it = out.end() - 1;
    }
    const auto idx = static_cast<std::size_t>(it - out.begin());
    it->mean_triangles += static_cast<double>(r.triangles);
    it->mean_k3plus += static_cast<double>(r.k3plus);
    ++counts[idx];
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].mean_triangles /= static_cast<double>(counts[i]);
    out[i].mean_k3plus /= static_cast<double>(counts[i]);
  }
  return out;
}

void write_csv_header(std::ostream& out, std::uint64_t seed) {
  out << "# budget-builder v" << kVersion << ", seed " << seed << '\n';
}

void write_trials_columns(std::ostream& out) {
  out << "target,k,n,t,b,strategy,seed,success,hit_time,edges_bought\n";
}

void write_trials_rows(std::ostream& out, const TrialsCsvContext& ctx,
                       const BatchResult& batch) {
  const auto name = pattern_name(ctx.target);
  const auto base = name.substr(0, name.find(':'));
  for (const auto& s : batch.trials) {
    out << base << ',' << ctx.target.k << ',' << ctx.config.n << ','
        << ctx.config.t << ',' << ctx.config.b << ',' << ctx.strategy << ','
        << s.seed << ',' << (s.success ? 1 : 0) << ',';
    if (s.hit_time) {
      out << *s.hit_time;
    } else {
      out << -1;
    }
    out << ',' << s.edges_bought << '\n';
  }
}

void write_sweep_columns(std::ostream& out) {
  out << "target,k,n,x,y,t,b,trials,successes,p_hat,ci_low,ci_high,y_star_pred\n";
}

void write_sweep_rows(std::ostream& out, std::span<const PhasePoint> points) {
  for (const auto& p : points) {
    const auto name = pattern_name(p.target);
    if (p.t_clamped) {
      out << "# clamped: round(n^x) > C(n,2) at n=" << p.n << " x="
          << format_double("%.6g", p.x) << ", t set to " << p.t << '\n';
    }
    out << name.substr(0, name.find(':')) << ',' << p.target.k << ',' << p.n
        << ',' << format_double("%.6g", p.x) << ',' << format_double("%.6g", p.y)
        << ',' << p.t << ',' << p.b << ',' << p.estimate.trials << ','
        << p.estimate.successes << ',' << format_double("%.6f", p.estimate.p_hat)
        << ',' << format_double("%.6f", p.estimate.ci_low) << ','
        << format_double("%.6f", p.estimate.ci_high) << ','
        << format_double("%.6f", p.predicted_y_star) << '\n';
  }
}

void write_probe_columns(std::ostream& out) {
  out << "n,t,b,adversary,triangles,c4,k3plus,p4,tl1_centers,tl2_centers,"
         "tl3_centers,scale_tri,scale_c4\n";
}

void write_probe_rows(std::ostream& out, std::span<const ProbeRecord> records) {
  for (const auto& r : records) {
    out << r.n << ',' << r.t << ',' << r.b << ',' << adversary_name(r.adversary)
        << ',' << r.triangles << ',' << r.c4 << ',' << r.k3plus << ',' << r.p4
        << ',' << r.tl_centers[0] << ',' << r.tl_centers[1] << ','
        << r.tl_centers[2] << ',' << format_double("%.6g", r.scale_tri) << ','
        << format_double("%.6g", r.scale_c4) << '\n';
  }
}

}  // namespace bb
