#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "budget_builder/estimate.hpp"
#include "budget_builder/pattern.hpp"
#include "budget_builder/process.hpp"
#include "budget_builder/strategies.hpp"

namespace bb {

inline constexpr const char* kVersion = "0.1.0";

// Worker threads for a batch; 0 means std::thread::hardware_concurrency().
struct BatchOptions {
  unsigned jobs = 0;
  bool early_stop = true;
};

struct TrialSummary {
  std::uint64_t seed = 0;
  bool success = false;
  std::optional<std::uint64_t> hit_time;
  std::uint64_t edges_bought = 0;
  PhaseStats phase_stats;
};

struct BatchResult {
  SuccessEstimate estimate;
  std::vector<TrialSummary> trials;  // in trial-index order
  std::uint64_t max_edges_bought = 0;
};

// Trial i runs with seed config.seed + i, so a row of trials.csv replays
// as a single trial from its recorded seed. Throws ConfigError for
// trials == 0; a ContractViolation in any trial aborts the batch and is
// rethrown with the trial's seed attached.
BatchResult run_trials(const ProcessConfig& config, const StrategySpec& strategy,
                       const Pattern& target, std::uint64_t trials,
                       const BatchOptions& options = {});

struct PhasePoint {
  Pattern target;
  std::uint32_t n = 0;
  double x = 0;
  double y = 0;
  std::uint64_t t = 0;
  std::uint64_t b = 0;
  bool t_clamped = false;  // round(n^x) exceeded C(n, 2)
  std::string strategy;
  SuccessEstimate estimate;
  double predicted_y_star = 0;
};

// Inclusive arithmetic grid; throws ConfigError if lo > hi or step <= 0.
std::vector<double> exponent_grid(double lo, double hi, double step);

// Cell seed derive_seed({seed, n, bits(x), bits(y)}); trial i of a cell uses
// derive_seed({cell_seed, i}). Points come out in (n, x, y) order.
std::vector<PhasePoint> sweep_grid(const Pattern& target,
                                   std::span<const std::uint32_t> n_list,
                                   std::span<const double> x_grid,
                                   std::span<const double> y_grid,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const BatchOptions& options = {});

// Crossover of the success curve at x (all n pooled). Empty if not estimable.
std::optional<double> estimate_crossover(std::span<const PhasePoint> points,
                                         double x);

enum class Adversary { DegreeGreedy, BuyAllPrefix };

std::string adversary_name(Adversary a);
Adversary parse_adversary(const std::string& text);

struct ProbeRecord {
  std::uint32_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t b = 0;
  Adversary adversary = Adversary::DegreeGreedy;
  std::uint64_t seed = 0;
  std::uint64_t triangles = 0;
  std::uint64_t c4 = 0;
  std::uint64_t k3plus = 0;
  std::uint64_t p4 = 0;
  // Vertices whose link graph has a matching of size >= l, l = 1, 2, 3.
  std::uint64_t tl_centers[3] = {0, 0, 0};
  double scale_tri = 0;  // b t^2 / n^3
  double scale_c4 = 0;   // b t^3 / n^4
  double scale_p4 = 0;   // b t^2 / n^2
};

// Runs the adversary over the full (t, b) process with detection off and
// counts patterns in what it bought. Trial i uses
// derive_seed({seed, n, t, b, i}).
std::vector<ProbeRecord> probe_counts(std::uint32_t n, std::uint64_t t,
                                      std::uint64_t b, Adversary adversary,
                                      std::uint64_t trials, std::uint64_t seed,
                                      const BatchOptions& options = {});

struct ProbeSummary {
  std::uint32_t n;
  std::uint64_t t;
  std::uint64_t b;
  double mean_triangles;
  double mean_k3plus;
  double scale_tri;
};

// Means per (n, t, b) group, in first-appearance order.
std::vector<ProbeSummary> summarize_probes(std::span<const ProbeRecord> records);

// CSV output. Every file starts with "# budget-builder v0.1.0, seed S".
void write_csv_header(std::ostream& out, std::uint64_t seed);

struct TrialsCsvContext {
  Pattern target;
  ProcessConfig config;
  std::string strategy;
};

void write_trials_columns(std::ostream& out);
// hit_time is -1 when the trial failed.
void write_trials_rows(std::ostream& out, const TrialsCsvContext& ctx,
                       const BatchResult& batch);

void write_sweep_columns(std::ostream& out);
// A clamped row is preceded by a "# clamped" comment line.
void write_sweep_rows(std::ostream& out, std::span<const PhasePoint> points);

void write_probe_columns(std::ostream& out);
void write_probe_rows(std::ostream& out, std::span<const ProbeRecord> records);

}  // namespace bb
