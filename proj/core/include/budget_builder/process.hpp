#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "budget_builder/builder_graph.hpp"
#include "budget_builder/detect.hpp"
#include "budget_builder/edge.hpp"
#include "budget_builder/rng.hpp"

namespace bb {

struct ProcessConfig {
  std::uint32_t n = 2;
  std::uint64_t t = 1;  // edges revealed
  std::uint64_t b = 0;  // purchase budget
  std::uint64_t seed = 0;
};

// Throws ConfigError unless n >= 2 and 1 <= t <= C(n, 2).
void validate(const ProcessConfig& config);

// Sub-stream ids under a trial seed.
inline constexpr std::uint64_t kEdgeStreamId = 0;
inline constexpr std::uint64_t kStrategyStreamId = 1;

// Bitset over pair indices of K_n.
class RevealedSet {
 public:
  explicit RevealedSet(std::uint32_t n);

  bool contains(const Edge& e) const { return test(pair_index(e)); }
  bool test(std::uint64_t idx) const {
    return (words_[idx >> 6] >> (idx & 63)) & 1U;
  }
  void set(std::uint64_t idx) { words_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }
  std::uint64_t size() const { return count_; }
  std::uint64_t capacity() const { return total_; }

  // Returns false if already present.
  bool insert(const Edge& e);

 private:
  std::vector<std::uint64_t> words_;
  std::uint64_t total_;
  std::uint64_t count_ = 0;
};

// Uniform random permutation of E(K_n), drawn lazily without replacement.
// Rejection sampling against the revealed set while fewer than half the
// pairs are out, then a partial Fisher-Yates over the explicit remainder.
// An optional forced prefix is emitted first (replay construction).
class EdgeStream {
 public:
  EdgeStream(std::uint32_t n, std::uint64_t limit, Rng rng,
             std::vector<Edge> forced_prefix = {});

  // Throws StreamExhausted once `limit` edges have been produced.
  Edge next();

  std::uint64_t clock() const { return revealed_.size(); }
  std::uint64_t limit() const { return limit_; }
  const RevealedSet& revealed() const { return revealed_; }

 private:
  void switch_to_shuffle();

  std::uint32_t n_;
  std::uint64_t limit_;
  Rng rng_;
  RevealedSet revealed_;
  std::vector<Edge> prefix_;
  std::vector<std::uint64_t> remaining_;
  bool shuffling_ = false;
};

// The (t, b) process: arrival clock, revealed history, purchased graph.
class Process {
 public:
  // Validates the config; RNG is the kEdgeStreamId sub-stream of config.seed.
  explicit Process(const ProcessConfig& config,
                   std::vector<Edge> forced_prefix = {});

  const ProcessConfig& config() const { return config_; }
  std::uint64_t clock() const { return stream_.clock(); }
  std::uint64_t budget_used() const { return budget_used_; }
  std::uint64_t budget_left() const { return config_.b - budget_used_; }
  const BuilderGraph& purchased() const { return purchased_; }
  const RevealedSet& revealed() const { return stream_.revealed(); }
  const std::vector<Edge>& history() const { return history_; }
  bool exhausted() const { return clock() >= config_.t; }

  Edge next_edge();

  // Buys the most recently revealed edge. Throws ContractViolation when the
  // budget is spent, nothing was revealed yet, or the edge was bought already.
  void purchase();

  // Moves the purchased graph out; the process is unusable afterwards.
  BuilderGraph release_purchased() { return std::move(purchased_); }

 private:
  ProcessConfig config_;
  EdgeStream stream_;
  BuilderGraph purchased_;
  std::vector<Edge> history_;
  std::uint64_t budget_used_ = 0;
  bool current_bought_ = true;
};

// What a strategy sees when offered edge number `clock` (1-based).
struct StepView {
  std::uint64_t clock;
  const ProcessConfig& config;
  std::uint64_t budget_used;
  const BuilderGraph& purchased;
  const RevealedSet& revealed;  // includes the offered edge

  std::uint64_t budget_left() const { return config.b - budget_used; }
};

enum class Decision { Skip, Buy };

using PhaseStats = std::vector<std::pair<std::string, std::uint64_t>>;

// An online (t, b)-strategy. decide() is called once per revealed edge, in
// order; returning Buy commits the purchase. Implementations may only look
// at the view, the offered edge and their own state.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string name() const = 0;
  virtual Decision decide(const StepView& step, const Edge& e) = 0;

  // The strategy's own belief that the target is complete; the driver
  // cross-checks it against the detector.
  virtual bool claims_success() const { return false; }
  virtual PhaseStats phase_stats() const { return {}; }
};

struct RunOptions {
  bool early_stop = true;
  bool record_trace = false;
};

struct TraceStep {
  Edge edge;
  bool bought;
};

struct TrialRecord {
  bool success = false;
  std::optional<std::uint64_t> hit_time;
  std::uint64_t edges_bought = 0;
  std::uint64_t edges_seen = 0;
  PhaseStats phase_stats;
  std::vector<TraceStep> trace;  // only with record_trace
  BuilderGraph purchased;
};

// Drives reveal -> decide -> purchase -> detect until the target appears
// (with early_stop) or the clock reaches t. `detector` may be null for
// counting runs. Throws ContractViolation if the strategy overspends, claims
// success the detector does not confirm, or a detected hit fails the batch
// re-check.
TrialRecord run_strategy(const ProcessConfig& config, Strategy& strategy,
                         const TargetDetector* detector,
                         const RunOptions& options = {},
                         std::vector<Edge> forced_prefix = {});

}  // namespace bb
