#include "budget_builder/process.hpp"

#include <algorithm>
#include <string>

#include "budget_builder/errors.hpp"

namespace bb {

void validate(const ProcessConfig& config) {
  if (config.n < 2) throw ConfigError("n must be at least 2");
  if (config.t < 1) throw ConfigError("t must be at least 1");
  if (config.t > pair_count(config.n)) {
    throw ConfigError("t = " + std::to_string(config.t) + " exceeds C(" +
                      std::to_string(config.n) +
                      ",2) = " + std::to_string(pair_count(config.n)));
  }
}

RevealedSet::RevealedSet(std::uint32_t n)
    : words_((pair_count(n) + 63) / 64, 0), total_(pair_count(n)) {}

bool RevealedSet::insert(const Edge& e) {
  const auto idx = pair_index(e);
  if (test(idx)) return false;
  set(idx);
  ++count_;
  return true;
}

EdgeStream::EdgeStream(std::uint32_t n, std::uint64_t limit, Rng rng,
                       std::vector<Edge> forced_prefix)
    : n_(n),
      limit_(limit),
      rng_(rng),
      revealed_(n),
      prefix_(std::move(forced_prefix)) {
  if (limit_ > revealed_.capacity()) {
    throw ConfigError("stream limit exceeds number of pairs");
  }
  if (prefix_.size() > limit_) {
    throw ConfigError("forced prefix longer than the stream");
  }
}

void EdgeStream::switch_to_shuffle() {
  remaining_.clear();
  remaining_.reserve(revealed_.capacity() - revealed_.size());
  for (std::uint64_t idx = 0; idx < revealed_.capacity(); ++idx) {
    if (!revealed_.test(idx)) remaining_.push_back(idx);
  }
  shuffling_ = true;
}

Edge EdgeStream::next() {
  const auto clock = revealed_.size();
  if (clock >= limit_) throw StreamExhausted("edge stream exhausted");

  if (clock < prefix_.size()) {
    const Edge e = prefix_[clock];
    if (e.u == e.v || e.v >= n_ || !revealed_.insert(e)) {
      throw ConfigError("forced prefix has an invalid or repeated edge");
    }
    if (shuffling_) {
      auto it = std::find(remaining_.begin(), remaining_.end(), pair_index(e));
      *it = remaining_.back();
      remaining_.pop_back();
    }
    return e;
  }

  const auto total = revealed_.capacity();
  if (!shuffling_ && 2 * clock >= total) switch_to_shuffle();

  std::uint64_t idx;
  if (shuffling_) {
    const auto j = rng_.below(remaining_.size());
    idx = remaining_[j];
    remaining_[j] = remaining_.back();
    remaining_.pop_back();
  } else {
    do {
      idx = rng_.below(total);
    } while (revealed_.test(idx));
  }
  const Edge e = pair_from_index(idx);
  revealed_.insert(e);
  return e;
}

Process::Process(const ProcessConfig& config, std::vector<Edge> forced_prefix)
    : config_((validate(config), config)),
      stream_(config.n, config.t, Rng::substream(config.seed, kEdgeStreamId),
              std::move(forced_prefix)),
      purchased_(config.n) {
  history_.reserve(config.t);
}

Edge Process::next_edge() {
  const Edge e = stream_.next();
  history_.push_back(e);
  current_bought_ = false;
  return e;
}

void Process::purchase() {
  if (history_.empty()) throw ContractViolation("purchase before any reveal");
  if (current_bought_) throw ContractViolation("edge already purchased");
  if (budget_used_ >= config_.b) {
    throw ContractViolation("purchase with exhausted budget (b = " +
                            std::to_string(config_.b) + ") at clock " +
                            std::to_string(clock()));
  }
  purchased_.insert(history_.back());
  ++budget_used_;
  current_bought_ = true;
}

TrialRecord run_strategy(const ProcessConfig& config, Strategy& strategy,
                         const TargetDetector* detector,
                         const RunOptions& options,
                         std::vector<Edge> forced_prefix) {
  Process process(config, std::move(forced_prefix));
  TrialRecord record;
  if (options.record_trace) record.trace.reserve(config.t);

  while (!process.exhausted()) {
    const Edge e = process.next_edge();
    const StepView view{process.clock(), process.config(), process.budget_used(),
                        process.purchased(), process.revealed()};
    const bool buy = strategy.decide(view, e) == Decision::Buy;
    if (buy) {
      process.purchase();
      if (detector && !record.success &&
          detector->hit_after_insert(process.purchased(), e)) {
        record.success = true;
        record.hit_time = process.clock();
      }
    }
    if (options.record_trace) record.trace.push_back({e, buy});
    if (strategy.claims_success() && detector && !record.success) {
      throw ContractViolation(strategy.name() + " claims " +
                              pattern_name(detector->pattern()) +
                              " at clock " + std::to_string(process.clock()) +
                              " but the detector finds none");
    }
    if (record.success && options.early_stop) break;
  }

  if (record.success && !detector->contains(process.purchased())) {
    throw ContractViolation("incremental hit not confirmed by batch detection");
  }
  record.edges_bought = process.budget_used();
  record.edges_seen = process.clock();
  record.phase_stats = strategy.phase_stats();
  record.purchased = process.release_purchased();
  return record;
}

}  // namespace bb
