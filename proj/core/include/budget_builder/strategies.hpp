#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "budget_builder/pattern.hpp"
#include "budget_builder/process.hpp"

namespace bb {

enum class StrategyKind {
  K4mShort,
  K4mLong,
  TkShort,
  TkLong,
  Connectivity,
  BuyAll,
  NeverBuy,
  DegreeGreedy,
};

std::string strategy_name(StrategyKind kind);
// Accepts the names produced by strategy_name. Throws ConfigError.
StrategyKind parse_strategy_kind(std::string_view text);

struct StrategyParams {
  std::uint64_t phase_length = 0;    // T
  std::uint32_t seed_set_size = 1;   // |R|; |H| for degree-greedy
  std::uint64_t per_vertex_cap = 0;  // first-phase purchases per seed vertex
  std::uint64_t initial_budget = 0;  // first phase (stars)
  std::uint64_t round_budget = 0;    // each later phase/round
  int k = 1;
};

struct StrategyOverrides {
  std::optional<StrategyKind> kind;
  std::optional<std::uint64_t> phase_length;
  std::optional<std::uint32_t> seed_set_size;
  std::optional<std::uint64_t> per_vertex_cap;
  std::optional<std::uint64_t> initial_budget;
  std::optional<std::uint64_t> round_budget;
};

struct StrategySpec {
  StrategyKind kind = StrategyKind::NeverBuy;
  StrategyParams params;
};

// Default parameterisation of `kind` for (n, t, b); k is the fan size.
StrategyParams default_params(StrategyKind kind, std::uint32_t n,
                              std::uint64_t t, std::uint64_t b, int k = 1);

// Regime split: K4- short if t <= n^{7/5}, T_k short if t <= n^{4/3}.
// TRIANGLE is handled as T_1. Other targets throw UnsupportedPattern.
StrategyKind regime_for(const Pattern& target, std::uint32_t n, std::uint64_t t);

StrategySpec select_strategy(const Pattern& target, std::uint32_t n,
                             std::uint64_t t, std::uint64_t b,
                             const StrategyOverrides& overrides = {});

// Applies overrides on top of default_params; throws ConfigError when the
// phase budgets could exceed b or |R| > n.
StrategySpec make_spec(StrategyKind kind, std::uint32_t n, std::uint64_t t,
                       std::uint64_t b, int k,
                       const StrategyOverrides& overrides = {});

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec,
                                        const ProcessConfig& config);

// Neighbourhoods of the seed vertices R = [0, r), snapshotted at a phase
// boundary. owners(x) lists, ascending, the seeds whose neighbourhood holds x.
class FrozenNeighborhoods {
 public:
  FrozenNeighborhoods() = default;
  FrozenNeighborhoods(const BuilderGraph& g, std::uint32_t r);

  bool frozen() const { return !owners_.empty(); }
  std::span<const Vertex> members(Vertex seed) const { return members_[seed]; }
  // Seeds v with {x, y} ⊆ N(v), ascending.
  std::vector<Vertex> owners_of(const Edge& e) const;

 private:
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::vector<Vertex>> owners_;
};

// K4- for t = O(n^{7/5}): stars on R, then edges inside the frozen
// neighbourhoods (triangles), then pairs that close a triangle into a diamond.
class K4mShortStrategy : public Strategy {
 public:
  explicit K4mShortStrategy(const StrategyParams& params);

  std::string name() const override { return "k4m-short"; }
  Decision decide(const StepView& step, const Edge& e) override;
  bool claims_success() const override { return claimed_; }
  PhaseStats phase_stats() const override;

  int phase() const { return phase_; }
  std::size_t candidate_count() const { return candidates_.size(); }
  bool is_candidate(const Edge& e) const {
    return candidates_.count(pair_index(e)) != 0;
  }

 private:
  void enter_phase(int next, const StepView& step);
  void build_candidates(const StepView& step);

  StrategyParams params_;
  int phase_ = 1;
  std::vector<std::uint64_t> seed_degree_;
  FrozenNeighborhoods hoods_;
  std::vector<std::vector<Vertex>> phase2_touch_;  // per seed
  std::vector<std::pair<Edge, std::vector<Vertex>>> phase2_edges_;
  std::unordered_set<std::uint64_t> candidates_;
  bool claimed_ = false;
  std::uint64_t bought_[4] = {0, 0, 0, 0};
  std::uint64_t budget_skips_ = 0;
  std::uint64_t max_multiplicity_ = 0;
};

// K4- for t = ω(n^{7/5}): star at vertex 0, then edges inside its
// neighbourhood until two share an endpoint.
class K4mLongStrategy : public Strategy {
 public:
  explicit K4mLongStrategy(const StrategyParams& params, std::uint32_t n);

  std::string name() const override { return "k4m-long"; }
  Decision decide(const StepView& step, const Edge& e) override;
  bool claims_success() const override { return claimed_; }
  PhaseStats phase_stats() const override;

 private:
  StrategyParams params_;
  int phase_ = 1;
  std::vector<char> in_hood_;
  std::vector<std::uint32_t> inner_degree_;
  bool claimed_ = false;
  std::uint64_t bought_[3] = {0, 0, 0};
  std::uint64_t budget_skips_ = 0;
};

// T_k for t = O(n^{4/3}): capped stars on R, then k rounds; each round buys
// edges inside surviving neighbourhoods that are disjoint from the edges
// already bought there, and drops seeds that gained nothing.
class TkShortStrategy : public Strategy {
 public:
  explicit TkShortStrategy(const StrategyParams& params);

  std::string name() const override { return "tk-short"; }
  Decision decide(const StepView& step, const Edge& e) override;
  bool claims_success() const override { return claimed_; }
  PhaseStats phase_stats() const override;

  // Surviving seeds after round 0 (all of R), 1, ..., up to the current one.
  const std::vector<std::vector<Vertex>>& survivor_history() const {
    return survivors_;
  }
  int round() const { return round_; }

 private:
  void advance_to(int next_round, const StepView& step);
  bool usable(Vertex seed, const Edge& e) const;

  StrategyParams params_;
  int round_ = 0;
  std::vector<std::uint64_t> seed_degree_;
  FrozenNeighborhoods hoods_;
  std::vector<char> alive_;
  std::vector<char> gained_;
  std::vector<std::vector<Vertex>> covered_;
  std::vector<int> disjoint_count_;
  std::vector<std::vector<Vertex>> survivors_;
  std::vector<std::uint64_t> bought_per_round_;
  bool claimed_ = false;
  std::uint64_t budget_skips_ = 0;
};

// T_k for t = ω(n^{4/3}): star at vertex 0, then edges inside its
// neighbourhood until they contain k disjoint ones.
class TkLongStrategy : public Strategy {
 public:
  TkLongStrategy(const StrategyParams& params, std::uint32_t n);

  std::string name() const override { return "tk-long"; }
  Decision decide(const StepView& step, const Edge& e) override;
  bool claims_success() const override { return claimed_; }
  PhaseStats phase_stats() const override;

 private:
  StrategyParams params_;
  int phase_ = 1;
  std::vector<char> in_hood_;
  std::vector<Vertex> hood_;
  std::vector<Vertex> local_index_;
  BuilderGraph inner_;  // bought edges inside the hood, relabelled
  bool claimed_ = false;
  std::uint64_t bought_[3] = {0, 0, 0};
  std::uint64_t budget_skips_ = 0;
};

// Buys an edge iff it merges two purchased components.
class ConnectivityStrategy : public Strategy {
 public:
  explicit ConnectivityStrategy(std::uint32_t n);

  std::string name() const override { return "connectivity"; }
  Decision decide(const StepView& step, const Edge& e) override;

  std::uint32_t components() const { return components_; }

 private:
  Vertex find(Vertex x);

  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;
  std::uint32_t components_;
};

class BuyAllStrategy : public Strategy {
 public:
  std::string name() const override { return "buy-all"; }
  Decision decide(const StepView& step, const Edge&) override {
    return step.budget_left() > 0 ? Decision::Buy : Decision::Skip;
  }
};

class NeverBuyStrategy : public Strategy {
 public:
  std::string name() const override { return "never-buy"; }
  Decision decide(const StepView&, const Edge&) override {
    return Decision::Skip;
  }
};

// Count-maximising adversary for the counting probes: stars on a fixed
// vertex set H = [0, h) with half the budget, then every edge that closes a
// triangle at a vertex of H while budget remains.
class DegreeGreedyStrategy : public Strategy {
 public:
  explicit DegreeGreedyStrategy(const StrategyParams& params);

  std::string name() const override { return "degree-greedy"; }
  Decision decide(const StepView& step, const Edge& e) override;
  PhaseStats phase_stats() const override;

 private:
  StrategyParams params_;
  std::uint64_t star_bought_ = 0;
  std::uint64_t closing_bought_ = 0;
};

}  // namespace bb
