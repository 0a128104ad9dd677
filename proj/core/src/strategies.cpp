#include "budget_builder/strategies.hpp"

#include <algorithm>

#include "budget_builder/detect.hpp"

namespace bb {

namespace {

bool is_seed(Vertex v, std::uint32_t r) { return v < r; }

bool contains_sorted(const std::vector<Vertex>& xs, Vertex x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

// ---------------------------------------------------------------------------

FrozenNeighborhoods::FrozenNeighborhoods(const BuilderGraph& g, std::uint32_t r)
    : members_(r), owners_(g.vertex_count()) {
  for (Vertex seed = 0; seed < r; ++seed) {
    auto nbrs = g.neighbors(seed);
    members_[seed].assign(nbrs.begin(), nbrs.end());
    for (Vertex x : nbrs) owners_[x].push_back(seed);
  }
}

std::vector<Vertex> FrozenNeighborhoods::owners_of(const Edge& e) const {
  std::vector<Vertex> out;
  const auto& a = owners_[e.u];
  const auto& b = owners_[e.v];
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------

K4mShortStrategy::K4mShortStrategy(const StrategyParams& params)
    : params_(params), seed_degree_(params.seed_set_size, 0) {}

void K4mShortStrategy::enter_phase(int next, const StepView& step) {
  while (phase_ < next) {
    if (phase_ == 1) {
      hoods_ = FrozenNeighborhoods(step.purchased, params_.seed_set_size);
      phase2_touch_.assign(params_.seed_set_size, {});
    } else if (phase_ == 2) {
      build_candidates(step);
    }
    ++phase_;
  }
}

void K4mShortStrategy::build_candidates(const StepView& step) {
  // For a bought {x, y} inside N(v), every z in N(v) \ {x, y} makes xz and
  // yz diamond-completing. Pairs already revealed can never arrive again.
  for (const auto& [xy, seeds] : phase2_edges_) {
    for (Vertex v : seeds) {
      for (Vertex z : hoods_.members(v)) {
        if (z == xy.u || z == xy.v) continue;
        for (Vertex end : {xy.u, xy.v}) {
          const Edge pair(end, z);
          if (step.revealed.contains(pair)) continue;
          candidates_.insert(pair_index(pair));
        }
      }
    }
  }
}

Decision K4mShortStrategy::decide(const StepView& step, const Edge& e) {
  const std::uint64_t T = params_.phase_length;
  const int target_phase = step.clock <= T ? 1 : (step.clock <= 2 * T ? 2 : 3);
  enter_phase(target_phase, step);
  const std::uint32_t r = params_.seed_set_size;

  switch (phase_) {
    case 1: {
      const bool su = is_seed(e.u, r);
      const bool sv = is_seed(e.v, r);
      if (!su && !sv) return Decision::Skip;
      if ((su && seed_degree_[e.u] >= params_.per_vertex_cap) ||
          (sv && seed_degree_[e.v] >= params_.per_vertex_cap)) {
        return Decision::Skip;
      }
      if (bought_[1] >= params_.initial_budget || step.budget_left() == 0) {
        ++budget_skips_;
        return Decision::Skip;
      }
      if (su) ++seed_degree_[e.u];
      if (sv) ++seed_degree_[e.v];
      ++bought_[1];
      return Decision::Buy;
    }
    case 2: {
      auto seeds = hoods_.owners_of(e);
      if (seeds.empty()) return Decision::Skip;
      if (bought_[2] >= params_.round_budget || step.budget_left() == 0) {
        ++budget_skips_;
        return Decision::Skip;
      }
      max_multiplicity_ = std::max<std::uint64_t>(max_multiplicity_, seeds.size());
      // Two seeds over the same pair, or a second edge at a shared endpoint
      // inside one neighbourhood, is already a diamond.
      if (seeds.size() >= 2) claimed_ = true;
      for (Vertex v : seeds) {
        auto& touch = phase2_touch_[v];
        if (contains_sorted(touch, e.u) || contains_sorted(touch, e.v)) {
          claimed_ = true;
        }
        touch.push_back(e.u);
        touch.push_back(e.v);
      }
      phase2_edges_.emplace_back(e, std::move(seeds));
      ++bought_[2];
      return Decision::Buy;
    }
    default: {
      if (claimed_ || candidates_.count(pair_index(e)) == 0) return Decision::Skip;
      if (step.budget_left() == 0) {
        ++budget_skips_;
        return Decision::Skip;
      }
      claimed_ = true;
      ++bought_[3];
      return Decision::Buy;
    }
  }
}

PhaseStats K4mShortStrategy::phase_stats() const {
  return {{"phase1_bought", bought_[1]},
          {"phase2_bought", bought_[2]},
          {"candidates", candidates_.size()},
          {"phase3_bought", bought_[3]},
          {"budget_skips", budget_skips_},
          {"max_hood_multiplicity", max_multiplicity_}};
}

// ---------------------------------------------------------------------------

K4mLongStrategy::K4mLongStrategy(const StrategyParams& params, std::uint32_t n)
    : params_(params), in_hood_(n, 0), inner_degree_(n, 0) {}

Decision K4mLongStrategy::decide(const StepView& step, const Edge& e) {
  constexpr Vertex anchor = 0;
  if (phase_ == 1 && step.clock > params_.phase_length) {
    for (Vertex x : step.purchased.neighbors(anchor)) in_hood_[x] = 1;
    phase_ = 2;
  }
  if (phase_ == 1) {
    if (!e.contains(anchor)) return Decision::Skip;
    if (bought_[1] >= params_.initial_budget || step.budget_left() == 0) {
      ++budget_skips_;
      return Decision::Skip;
    }
    ++bought_[1];
    return Decision::Buy;
  }
  if (!in_hood_[e.u] || !in_hood_[e.v]) return Decision::Skip;
  if (bought_[2] >= params_.round_budget || step.budget_left() == 0) {
    ++budget_skips_;
    return Decision::Skip;
  }
  // P3 inside N(anchor) plus the anchor is a diamond.
  if (++inner_degree_[e.u] >= 2) claimed_ = true;
  if (++inner_degree_[e.v] >= 2) claimed_ = true;
  ++bought_[2];
  return Decision::Buy;
}

PhaseStats K4mLongStrategy::phase_stats() const {
  return {{"phase1_bought", bought_[1]},
          {"phase2_bought", bought_[2]},
          {"budget_skips", budget_skips_}};
}

// ---------------------------------------------------------------------------

TkShortStrategy::TkShortStrategy(const StrategyParams& params)
    : params_(params),
      seed_degree_(params.seed_set_size, 0),
      alive_(params.seed_set_size, 1),
      gained_(params.seed_set_size, 0),
      covered_(params.seed_set_size),
      disjoint_count_(params.seed_set_size, 0),
      bought_per_round_(static_cast<std::size_t>(params.k) + 1, 0) {
  std::vector<Vertex> all(params.seed_set_size);
  for (Vertex v = 0; v < params.seed_set_size; ++v) all[v] = v;
  survivors_.push_back(std::move(all));
}

void TkShortStrategy::advance_to(int next_round, const StepView& step) {
  while (round_ < next_round) {
    if (round_ == 0) {
      hoods_ = FrozenNeighborhoods(step.purchased, params_.seed_set_size);
    } else {
      std::vector<Vertex> kept;
      for (Vertex v : survivors_.back()) {
        if (!gained_[v]) alive_[v] = 0;
        if (alive_[v]) kept.push_back(v);
      }
      survivors_.push_back(std::move(kept));
      std::fill(gained_.begin(), gained_.end(), 0);
    }
    ++round_;
  }
}

bool TkShortStrategy::usable(Vertex seed, const Edge& e) const {
  const auto& cov = covered_[seed];
  return alive_[seed] && !contains_sorted(cov, e.u) && !contains_sorted(cov, e.v);
}

Decision TkShortStrategy::decide(const StepView& step, const Edge& e) {
  const std::uint64_t T = params_.phase_length;
  const int k = params_.k;
  int target_round = 0;
  if (T == 0) {
    target_round = k;
  } else if (step.clock > T) {
    target_round = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(k), (step.clock - 1) / T));
  }
  advance_to(target_round, step);
  const std::uint32_t r = params_.seed_set_size;

  if (round_ == 0) {
    const bool su = is_seed(e.u, r);
    const bool sv = is_seed(e.v, r);
    if (!su && !sv) return Decision::Skip;
    if ((su && seed_degree_[e.u] >= params_.per_vertex_cap) ||
        (sv && seed_degree_[e.v] >= params_.per_vertex_cap)) {
      return Decision::Skip;
    }
    if (bought_per_round_[0] >= params_.initial_budget || step.budget_left() == 0) {
      ++budget_skips_;
      return Decision::Skip;
    }
    if (su) ++seed_degree_[e.u];
    if (sv) ++seed_degree_[e.v];
    ++bought_per_round_[0];
    return Decision::Buy;
  }

  auto seeds = hoods_.owners_of(e);
  const bool any = std::any_of(seeds.begin(), seeds.end(),
                               [&](Vertex v) { return usable(v, e); });
  if (!any) return Decision::Skip;
  auto& round_bought = bought_per_round_[static_cast<std::size_t>(round_)];
  if (round_bought >= params_.round_budget || step.budget_left() == 0) {
    ++budget_skips_;
    return Decision::Skip;
  }
  for (Vertex v : seeds) {
    if (!usable(v, e)) continue;
    covered_[v].push_back(e.u);
    covered_[v].push_back(e.v);
    gained_[v] = 1;
    if (++disjoint_count_[v] >= k) claimed_ = true;
  }
  ++round_bought;
  return Decision::Buy;
}

PhaseStats TkShortStrategy::phase_stats() const {
  PhaseStats out;
  for (std::size_t i = 0; i < bought_per_round_.size(); ++i) {
    out.emplace_back("round" + std::to_string(i) + "_bought", bought_per_round_[i]);
  }
  for (std::size_t i = 0; i < survivors_.size(); ++i) {
    out.emplace_back("survivors" + std::to_string(i), survivors_[i].size());
  }
  out.emplace_back("budget_skips", budget_skips_);
  return out;
}

// ---------------------------------------------------------------------------

TkLongStrategy::TkLongStrategy(const StrategyParams& params, std::uint32_t n)
    : params_(params), in_hood_(n, 0) {}

Decision TkLongStrategy::decide(const StepView& step, const Edge& e) {
  constexpr Vertex anchor = 0;
  if (phase_ == 1 && step.clock > params_.phase_length) {
    auto nbrs = step.purchased.neighbors(anchor);
    hood_.assign(nbrs.begin(), nbrs.end());
    local_index_.assign(in_hood_.size(), 0);
    for (std::size_t i = 0; i < hood_.size(); ++i) {
      in_hood_[hood_[i]] = 1;
      local_index_[hood_[i]] = static_cast<Vertex>(i);
    }
    inner_ = BuilderGraph(static_cast<std::uint32_t>(hood_.size()));
    phase_ = 2;
  }
  if (phase_ == 1) {
    if (!e.contains(anchor)) return Decision::Skip;
    if (bought_[1] >= params_.initial_budget || step.budget_left() == 0) {
      ++budget_skips_;
      return Decision::Skip;
    }
    ++bought_[1];
    return Decision::Buy;
  }
  if (!in_hood_[e.u] || !in_hood_[e.v]) return Decision::Skip;
  if (bought_[2] >= params_.round_budget || step.budget_left() == 0) {
    ++budget_skips_;
    return Decision::Skip;
  }
  ++bought_[2];
  inner_.insert(Edge(local_index_[e.u], local_index_[e.v]));
  if (!claimed_ && bought_[2] >= static_cast<std::uint64_t>(params_.k)) {
    // The matching is recomputed, not greedily committed: an edge meeting an
    // earlier one is still bought and may enable a larger matching later.
    std::vector<Vertex> all(inner_.vertex_count());
    for (Vertex i = 0; i < all.size(); ++i) all[i] = i;
    claimed_ = matching_within(inner_, all, params_.k) >= params_.k;
  }
  return Decision::Buy;
}

PhaseStats TkLongStrategy::phase_stats() const {
  return {{"phase1_bought", bought_[1]},
          {"phase2_bought", bought_[2]},
          {"budget_skips", budget_skips_}};
}

// ---------------------------------------------------------------------------

ConnectivityStrategy::ConnectivityStrategy(std::uint32_t n)
    : parent_(n), size_(n, 1), components_(n) {
  for (Vertex v = 0; v < n; ++v) parent_[v] = v;
}

Vertex ConnectivityStrategy::find(Vertex x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

Decision ConnectivityStrategy::decide(const StepView& step, const Edge& e) {
  Vertex a = find(e.u);
  Vertex b = find(e.v);
  if (a == b || step.budget_left() == 0) return Decision::Skip;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return Decision::Buy;
}

// ---------------------------------------------------------------------------

DegreeGreedyStrategy::DegreeGreedyStrategy(const StrategyParams& params)
    : params_(params) {}

Decision DegreeGreedyStrategy::decide(const StepView& step, const Edge& e) {
  if (step.budget_left() == 0) return Decision::Skip;
  const std::uint32_t h = params_.seed_set_size;
  if ((e.u < h || e.v < h) && star_bought_ < params_.initial_budget) {
    ++star_bought_;
    return Decision::Buy;
  }
  // Closes a triangle at some vertex of H.
  auto nu = step.purchased.neighbors(e.u);
  auto nv = step.purchased.neighbors(e.v);
  auto i = nu.begin();
  auto j = nv.begin();
  while (i != nu.end() && j != nv.end() && *i < h && *j < h) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++closing_bought_;
      return Decision::Buy;
    }
  }
  return Decision::Skip;
}

PhaseStats DegreeGreedyStrategy::phase_stats() const {
  return {{"star_bought", star_bought_}, {"closing_bought", closing_bought_}};
}

}  // namespace bb
