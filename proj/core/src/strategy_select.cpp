#include <algorithm>
#include <cmath>

#include "budget_builder/errors.hpp"
#include "budget_builder/strategies.hpp"

namespace bb {

namespace {

struct KindName {
  StrategyKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {StrategyKind::K4mShort, "k4m-short"},
    {StrategyKind::K4mLong, "k4m-long"},
    {StrategyKind::TkShort, "tk-short"},
    {StrategyKind::TkLong, "tk-long"},
    {StrategyKind::Connectivity, "connectivity"},
    {StrategyKind::BuyAll, "buy-all"},
    {StrategyKind::NeverBuy, "never-buy"},
    {StrategyKind::DegreeGreedy, "degree-greedy"},
};

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// Largest r for which stars on r seeds over T uniform edges are expected to
// fit the phase budget: T (1 - (1 - r/n)^2) <= budget.
double budget_limited_seeds(std::uint32_t n, std::uint64_t T,
                            std::uint64_t budget) {
  if (T == 0 || budget >= T) return n;
  const double frac = 1.0 - std::sqrt(1.0 - static_cast<double>(budget) / T);
  return std::floor(n * frac);
}

// Geometric mean of the window [lower, bn/t] for the seed-set size, clamped
// to [1, min(n, budget-limited size)].
std::uint32_t seed_set_size(double log_lower, std::uint32_t n, std::uint64_t t,
                            std::uint64_t b, std::uint64_t T,
                            std::uint64_t phase_budget) {
  if (b == 0 || T == 0) return 1;
  const double log_upper =
      std::log(static_cast<double>(b)) + std::log(static_cast<double>(n)) -
      std::log(static_cast<double>(t));
  double r = std::exp(0.5 * (log_lower + log_upper));
  r = std::min({r, static_cast<double>(n), budget_limited_seeds(n, T, phase_budget)});
  r = std::max(r, 1.0);
  return static_cast<std::uint32_t>(std::llround(r));
}

}  // namespace

std::string strategy_name(StrategyKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "?";
}

StrategyKind parse_strategy_kind(std::string_view text) {
  for (const auto& kn : kKindNames) {
    if (text == kn.name) return kn.kind;
  }
  throw ConfigError("unknown strategy '" + std::string(text) + "'");
}

StrategyParams default_params(StrategyKind kind, std::uint32_t n,
                              std::uint64_t t, std::uint64_t b, int k) {
  if (k < 1) throw ConfigError("fan size k must be >= 1");
  StrategyParams p;
  p.k = k;
  const double log_n = std::log(static_cast<double>(n));
  switch (kind) {
    case StrategyKind::K4mShort: {
      p.phase_length = t / 3;
      // The stars are the binding resource; phases 2 and 3 buy a handful of
      // edges near the threshold. Phase 3 gets whatever is left.
      p.initial_budget = b * 4 / 5;
      p.round_budget = b / 10;
      // Every R-incident edge is bought; the phase-1 budget is the only limit.
      p.per_vertex_cap = std::max<std::uint64_t>(1, p.phase_length);
      // Window lower end n^7 / T^5.
      const double log_lower =
          p.phase_length == 0
              ? 0.0
              : 7 * log_n - 5 * std::log(static_cast<double>(p.phase_length));
      p.seed_set_size =
          seed_set_size(log_lower, n, t, b, p.phase_length, p.initial_budget);
      break;
    }
    case StrategyKind::TkShort: {
      p.phase_length = t / static_cast<std::uint64_t>(k + 1);
      p.initial_budget = b / static_cast<std::uint64_t>(k + 1);
      p.round_budget = p.initial_budget;
      // T / 2kn is below one at laboratory sizes; the degree bound 3T/n keeps
      // neighbourhoods non-trivial.
      const std::uint64_t nominal_cap = p.phase_length / (2ULL * k * n) + 1;
      p.per_vertex_cap =
          std::max(nominal_cap, ceil_div(3 * p.phase_length, n));
      // Window lower end n^{4k} / T^{3k}.
      const double log_lower =
          p.phase_length == 0
              ? 0.0
              : 4.0 * k * log_n -
                    3.0 * k * std::log(static_cast<double>(p.phase_length));
      p.seed_set_size =
          seed_set_size(log_lower, n, t, b, p.phase_length, p.initial_budget);
      break;
    }
    case StrategyKind::K4mLong:
    case StrategyKind::TkLong:
      p.phase_length = t / 2;
      p.initial_budget = b / 2;
      p.round_budget = b / 2;
      p.seed_set_size = 1;
      break;
    case StrategyKind::DegreeGreedy: {
      // Stars of degree ~2t/n on h vertices use about half the budget.
      const double h = static_cast<double>(b) * n / (4.0 * static_cast<double>(t));
      p.seed_set_size = static_cast<std::uint32_t>(
          std::clamp(std::floor(h), 1.0, static_cast<double>(n)));
      p.initial_budget = b / 2;
      p.round_budget = b - b / 2;
      p.phase_length = t;
      break;
    }
    case StrategyKind::Connectivity:
    case StrategyKind::BuyAll:
    case StrategyKind::NeverBuy:
      p.phase_length = t;
      p.initial_budget = b;
      break;
  }
  return p;
}

StrategyKind regime_for(const Pattern& target, std::uint32_t n, std::uint64_t t) {
  const double td = static_cast<double>(t);
  const double nd = static_cast<double>(n);
  switch (target.tag) {
    case PatternTag::K4Minus:
      return td <= std::pow(nd, 7.0 / 5.0) ? StrategyKind::K4mShort
                                           : StrategyKind::K4mLong;
    case PatternTag::TK:
    case PatternTag::Triangle:
      return td <= std::pow(nd, 4.0 / 3.0) ? StrategyKind::TkShort
                                           : StrategyKind::TkLong;
    default:
      throw UnsupportedPattern("no builder strategy for target " +
                               pattern_name(target));
  }
}

StrategySpec make_spec(StrategyKind kind, std::uint32_t n, std::uint64_t t,
                       std::uint64_t b, int k,
                       const StrategyOverrides& overrides) {
  StrategySpec spec{kind, default_params(kind, n, t, b, k)};
  auto& p = spec.params;
  if (overrides.phase_length) p.phase_length = *overrides.phase_length;
  if (overrides.seed_set_size) p.seed_set_size = *overrides.seed_set_size;
  if (overrides.per_vertex_cap) p.per_vertex_cap = *overrides.per_vertex_cap;
  if (overrides.initial_budget) p.initial_budget = *overrides.initial_budget;
  if (overrides.round_budget) p.round_budget = *overrides.round_budget;

  if (p.seed_set_size < 1 || p.seed_set_size > n) {
    throw ConfigError("seed set size must lie in [1, n]");
  }
  std::uint64_t committed = 0;
  switch (kind) {
    case StrategyKind::K4mShort:
    case StrategyKind::K4mLong:
    case StrategyKind::TkLong:
      committed = p.initial_budget + p.round_budget;
      break;
    case StrategyKind::TkShort:
      committed = p.initial_budget + static_cast<std::uint64_t>(k) * p.round_budget;
      break;
    case StrategyKind::DegreeGreedy:
      committed = p.initial_budget;
      break;
    default:
      break;
  }
  if (committed > b) {
    throw ConfigError("phase budgets sum to " + std::to_string(committed) +
                      " > b = " + std::to_string(b));
  }
  return spec;
}

StrategySpec select_strategy(const Pattern& target, std::uint32_t n,
                             std::uint64_t t, std::uint64_t b,
                             const StrategyOverrides& overrides) {
  const StrategyKind kind =
      overrides.kind ? *overrides.kind : regime_for(target, n, t);
  const int k = target.tag == PatternTag::TK ? target.k : 1;
  return make_spec(kind, n, t, b, k, overrides);
}

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec,
                                        const ProcessConfig& config) {
  switch (spec.kind) {
    case StrategyKind::K4mShort:
      return std::make_unique<K4mShortStrategy>(spec.params);
    case StrategyKind::K4mLong:
      return std::make_unique<K4mLongStrategy>(spec.params, config.n);
    case StrategyKind::TkShort:
      return std::make_unique<TkShortStrategy>(spec.params);
    case StrategyKind::TkLong:
      return std::make_unique<TkLongStrategy>(spec.params, config.n);
    case StrategyKind::Connectivity:
      return std::make_unique<ConnectivityStrategy>(config.n);
    case StrategyKind::BuyAll:
      return std::make_unique<BuyAllStrategy>();
    case StrategyKind::NeverBuy:
      return std::make_unique<NeverBuyStrategy>();
    case StrategyKind::DegreeGreedy:
      return std::make_unique<DegreeGreedyStrategy>(spec.params);
  }
  throw ConfigError("unknown strategy kind");
}

}  // namespace bb
