#include <algorithm>
#include <random>

#include "budget_builder/detect.hpp"
#include "budget_builder/errors.hpp"
#include "budget_builder/strategies.hpp"
#include "doctest.h"

using namespace bb;

namespace {

// Pads `head` with edges among vertices >= `from` that are not in head,
// until it has t edges, so the whole stream is scripted.
std::vector<Edge> scripted(std::uint32_t n, std::uint64_t t, std::vector<Edge> head,
                           Vertex from) {
  for (Vertex u = from; u < n && head.size() < t; ++u) {
    for (Vertex v = u + 1; v < n && head.size() < t; ++v) {
      if (std::find(head.begin(), head.end(), Edge(u, v)) == head.end()) {
        head.emplace_back(u, v);
      }
    }
  }
  return head;
}

std::vector<Edge> filler(std::uint32_t n, std::size_t count, Vertex from,
                         const std::vector<Edge>& avoid) {
  std::vector<Edge> out;
  for (Vertex u = from; u < n && out.size() < count; ++u) {
    for (Vertex v = u + 1; v < n && out.size() < count; ++v) {
      const Edge e(u, v);
      if (std::find(avoid.begin(), avoid.end(), e) == avoid.end()) out.push_back(e);
    }
  }
  return out;
}

void append(std::vector<Edge>& to, const std::vector<Edge>& more) {
  to.insert(to.end(), more.begin(), more.end());
}

TrialRecord run_scripted(const ProcessConfig& cfg, Strategy& s, const Pattern& target,
                         const std::vector<Edge>& stream, bool early_stop = true) {
  const TargetDetector det(target);
  return run_strategy(cfg, s, &det, {early_stop, true}, stream);
}

std::uint64_t stat(const PhaseStats& stats, const std::string& key) {
  for (const auto& [k, v] : stats) {
    if (k == key) return v;
  }
  FAIL("missing stat " << key);
  return 0;
}

}  // namespace

TEST_CASE("select_strategy regime split") {
  CHECK(select_strategy(Pattern::k4_minus(), 400, 2000, 256).kind == StrategyKind::K4mShort);
  CHECK(select_strategy(Pattern::k4_minus(), 400, 20000, 4).kind == StrategyKind::K4mLong);
  CHECK(select_strategy(Pattern::fan(2), 400, 2000, 51).kind == StrategyKind::TkShort);
  CHECK(select_strategy(Pattern::fan(2), 400, 3000, 51).kind == StrategyKind::TkLong);
  CHECK(select_strategy(Pattern::triangle(), 400, 20000, 51).kind == StrategyKind::TkLong);
  CHECK(select_strategy(Pattern::fan(3), 400, 2000, 51).params.k == 3);
  CHECK_THROWS_AS(select_strategy(Pattern::c4(), 400, 2000, 10), UnsupportedPattern);

  StrategyOverrides forced;
  forced.kind = StrategyKind::BuyAll;
  CHECK(select_strategy(Pattern::k4_minus(), 400, 2000, 10, forced).kind == StrategyKind::BuyAll);
}

TEST_CASE("default parameters") {
  const auto k4 = default_params(StrategyKind::K4mShort, 400, 2000, 2560);
  CHECK(k4.phase_length == 666);
  CHECK(k4.per_vertex_cap == 666);  // uncapped
  CHECK(k4.initial_budget == 2048);
  CHECK(k4.round_budget == 256);
  CHECK(k4.seed_set_size >= 1);
  CHECK(k4.seed_set_size <= 400);

  const auto tk = default_params(StrategyKind::TkShort, 400, 2000, 512, 2);
  CHECK(tk.phase_length == 666);
  CHECK(tk.initial_budget == 170);
  CHECK(tk.round_budget == 170);
  CHECK(tk.k == 2);

  const auto lng = default_params(StrategyKind::K4mLong, 400, 20000, 80);
  CHECK(lng.phase_length == 10000);
  CHECK(lng.initial_budget == 40);
  CHECK(lng.round_budget == 40);

  // Zero budget still gives a valid instance.
  CHECK(default_params(StrategyKind::K4mShort, 400, 2000, 0).seed_set_size == 1);
}

TEST_CASE("make_spec validates overrides") {
  StrategyOverrides too_many;
  too_many.seed_set_size = 401;
  CHECK_THROWS_AS(make_spec(StrategyKind::K4mShort, 400, 2000, 100, 1, too_many), ConfigError);
  StrategyOverrides none;
  none.seed_set_size = 0;
  CHECK_THROWS_AS(make_spec(StrategyKind::K4mShort, 400, 2000, 100, 1, none), ConfigError);
  StrategyOverrides overspend;
  overspend.round_budget = 30;  // 80 + 30 > 100
  CHECK_THROWS_AS(make_spec(StrategyKind::K4mShort, 400, 2000, 100, 1, overspend), ConfigError);
  StrategyOverrides tk_rounds;
  tk_rounds.round_budget = 40;  // 33 + 2 * 40 > 100
  CHECK_THROWS_AS(make_spec(StrategyKind::TkShort, 400, 2000, 100, 2, tk_rounds), ConfigError);
  CHECK_THROWS_AS(default_params(StrategyKind::TkShort, 400, 2000, 100, 0), ConfigError);
}

TEST_CASE("strategy names round-trip") {
  for (auto kind : {StrategyKind::K4mShort, StrategyKind::K4mLong, StrategyKind::TkShort,
                    StrategyKind::TkLong, StrategyKind::Connectivity, StrategyKind::BuyAll,
                    StrategyKind::NeverBuy, StrategyKind::DegreeGreedy}) {
    CHECK(parse_strategy_kind(strategy_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_strategy_kind("greedy"), ConfigError);
}

TEST_CASE("k4m-short: an edge in two neighbourhoods completes the diamond in phase 2") {
  const std::uint32_t n = 20;
  const ProcessConfig cfg{n, 30, 30, 1};
  StrategyOverrides o;
  o.seed_set_size = 2;
  o.per_vertex_cap = 2;
  const auto spec = make_spec(StrategyKind::K4mShort, n, 30, 30, 1, o);
  REQUIRE(spec.params.phase_length == 10);

  std::vector<Edge> head = {{0, 5}, {0, 6}, {1, 5}, {1, 6}, {0, 7}};
  append(head, filler(n, 5, 10, head));
  head.emplace_back(5, 6);
  const auto stream = scripted(n, 30, head, 10);

  K4mShortStrategy s(spec.params);
  const auto rec = run_scripted(cfg, s, Pattern::k4_minus(), stream);
  CHECK(rec.trace[0].bought);    // R-incident, under cap
  CHECK(rec.trace[3].bought);
  CHECK_FALSE(rec.trace[4].bought);  // vertex 0 is at its cap of 2
  CHECK_FALSE(rec.trace[5].bought);  // misses R
  CHECK(rec.trace[10].bought);
  CHECK(rec.success);
  CHECK(rec.hit_time == 11);
  CHECK(s.claims_success());
  CHECK(stat(rec.phase_stats, "max_hood_multiplicity") == 2);
}

TEST_CASE("k4m-short: phase 3 buys a candidate pair and skips everything else") {
  const std::uint32_t n = 20;
  const ProcessConfig cfg{n, 30, 30, 2};
  StrategyOverrides o;
  o.seed_set_size = 1;
  o.per_vertex_cap = 3;
  const auto spec = make_spec(StrategyKind::K4mShort, n, 30, 30, 1, o);

  std::vector<Edge> head = {{0, 5}, {0, 6}, {0, 7}};
  append(head, filler(n, 7, 10, head));
  head.emplace_back(5, 6);  // triangle 0-5-6 in phase 2
  append(head, filler(n, 9, 10, head));
  head.emplace_back(8, 9);  // phase 3, not a candidate
  head.emplace_back(5, 7);  // candidate
  const auto stream = scripted(n, 30, head, 10);

  K4mShortStrategy s(spec.params);
  const auto rec = run_scripted(cfg, s, Pattern::k4_minus(), stream);
  CHECK(s.phase() == 3);
  CHECK(s.candidate_count() == 2);  // {5,7} and {6,7}
  CHECK(s.is_candidate({6, 7}));
  CHECK(rec.trace[10].bought);
  CHECK_FALSE(rec.trace[20].bought);
  CHECK(rec.trace[21].bought);
  CHECK(rec.success);
  CHECK(rec.hit_time == 22);
}

TEST_CASE("k4m-short: an exhausted phase budget degrades to skips") {
  const std::uint32_t n = 20;
  const ProcessConfig cfg{n, 30, 2, 3};
  StrategyOverrides o;
  o.seed_set_size = 2;
  const auto spec = make_spec(StrategyKind::K4mShort, n, 30, 2, 1, o);
  REQUIRE(spec.params.initial_budget == 1);
  std::vector<Edge> head = {{0, 5}, {1, 6}};
  const auto stream = scripted(n, 30, head, 10);
  K4mShortStrategy s(spec.params);
  const auto rec = run_scripted(cfg, s, Pattern::k4_minus(), stream, false);
  CHECK(rec.trace[0].bought);
  CHECK_FALSE(rec.trace[1].bought);
  CHECK(stat(rec.phase_stats, "budget_skips") >= 1);
  CHECK(rec.edges_bought <= 2);
}

TEST_CASE("k4m-long: star, then a P3 inside the neighbourhood") {
  const std::uint32_t n = 10;
  const ProcessConfig cfg{n, 20, 10, 4};
  const auto spec = make_spec(StrategyKind::K4mLong, n, 20, 10, 1);
  REQUIRE(spec.params.phase_length == 10);
  std::vector<Edge> head = {{0, 7}, {0, 2}, {0, 3}};
  std::vector<Edge> avoid = head;
  append(avoid, {{5, 6}, {2, 3}, {3, 7}});
  append(head, filler(n, 7, 4, avoid));
  head.emplace_back(5, 6);  // outside N(0) = {2, 3, 7}
  head.emplace_back(2, 3);
  head.emplace_back(3, 7);
  const auto stream = scripted(n, 20, head, 4);
  K4mLongStrategy s(spec.params, n);
  const auto rec = run_scripted(cfg, s, Pattern::k4_minus(), stream);
  CHECK(rec.trace[0].bought);
  CHECK_FALSE(rec.trace[10].bought);
  CHECK(rec.trace[11].bought);
  CHECK(rec.trace[12].bought);
  CHECK(rec.success);
  CHECK(rec.hit_time == 13);
}

TEST_CASE("tk-short: cap, disjointness and completion") {
  const std::uint32_t n = 30;
  const ProcessConfig cfg{n, 30, 30, 5};
  StrategyOverrides o;
  o.seed_set_size = 1;
  o.per_vertex_cap = 4;
  const auto spec = make_spec(StrategyKind::TkShort, n, 30, 30, 2, o);
  REQUIRE(spec.params.phase_length == 10);

  std::vector<Edge> head = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
  append(head, filler(n, 5, 10, head));
  head.emplace_back(1, 2);  // round 1
  head.emplace_back(2, 3);  // meets 1-2 at 2
  append(head, filler(n, 8, 10, head));
  head.emplace_back(3, 4);  // round 2, disjoint: T_2 at 0
  const auto stream = scripted(n, 30, head, 10);

  TkShortStrategy s(spec.params);
  const auto rec = run_scripted(cfg, s, Pattern::fan(2), stream);
  CHECK(rec.trace[3].bought);
  CHECK_FALSE(rec.trace[4].bought);  // at cap
  CHECK(rec.trace[10].bought);
  CHECK_FALSE(rec.trace[11].bought);
  CHECK(rec.trace[20].bought);
  CHECK(rec.success);
  CHECK(rec.hit_time == 21);
  REQUIRE(s.survivor_history().size() == 2);
  CHECK(s.survivor_history()[1] == std::vector<Vertex>{0});
}

TEST_CASE("tk-short: a seed that gains nothing in a round is dropped") {
  const std::uint32_t n = 30;
  const ProcessConfig cfg{n, 30, 30, 6};
  StrategyOverrides o;
  o.seed_set_size = 2;
  o.per_vertex_cap = 3;
  const auto spec = make_spec(StrategyKind::TkShort, n, 30, 30, 2, o);
  std::vector<Edge> head = {{0, 2}, {0, 3}, {1, 4}, {1, 5}};
  append(head, filler(n, 6, 10, head));
  head.emplace_back(2, 3);  // only seed 0 gains
  append(head, filler(n, 9, 10, head));
  head.emplace_back(4, 5);  // seed 1 is dead by now
  const auto stream = scripted(n, 30, head, 10);
  TkShortStrategy s(spec.params);
  const auto rec = run_scripted(cfg, s, Pattern::fan(2), stream, false);
  CHECK(rec.trace[10].bought);
  CHECK_FALSE(rec.trace[20].bought);
  REQUIRE(s.survivor_history().size() == 2);
  CHECK(s.survivor_history()[0] == std::vector<Vertex>{0, 1});
  CHECK(s.survivor_history()[1] == std::vector<Vertex>{0});
  CHECK_FALSE(rec.success);
}

TEST_CASE("tk-long: matching is recomputed, not greedily committed") {
  const std::uint32_t n = 10;
  const ProcessConfig cfg{n, 20, 20, 7};
  const auto spec = make_spec(StrategyKind::TkLong, n, 20, 20, 2);
  std::vector<Edge> head = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  append(head, filler(n, 6, 5, head));
  head.emplace_back(2, 3);
  head.emplace_back(1, 2);  // meets 2-3; matching stays 1
  head.emplace_back(3, 4);  // {1,2} + {3,4}
  const auto stream = scripted(n, 20, head, 5);
  TkLongStrategy s(spec.params, n);
  const auto rec = run_scripted(cfg, s, Pattern::fan(2), stream);
  CHECK(rec.trace[10].bought);
  CHECK(rec.trace[11].bought);
  CHECK(rec.trace[12].bought);
  CHECK(rec.success);
  CHECK(rec.hit_time == 13);
}

TEST_CASE("tk-long with k = 1 is the triangle strategy") {
  const std::uint32_t n = 10;
  const ProcessConfig cfg{n, 20, 20, 8};
  const auto spec = make_spec(StrategyKind::TkLong, n, 20, 20, 1);
  std::vector<Edge> head = {{0, 1}, {0, 2}};
  append(head, filler(n, 8, 5, head));
  head.emplace_back(1, 2);
  const auto stream = scripted(n, 20, head, 5);
  TkLongStrategy s(spec.params, n);
  const auto rec = run_scripted(cfg, s, Pattern::triangle(), stream);
  CHECK(rec.success);
  CHECK(rec.hit_time == 11);
  CHECK(s.claims_success());
}

TEST_CASE("connectivity buys exactly the edges that merge components") {
  ConnectivityStrategy s(6);
  const std::vector<Edge> stream = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {2, 3}, {1, 4}};
  const auto rec = run_strategy({6, 6, 6, 0}, s, nullptr, {false, true}, stream);
  const bool expect[] = {true, true, false, true, true, false};
  for (std::size_t i = 0; i < stream.size(); ++i) CHECK(rec.trace[i].bought == expect[i]);
  CHECK(s.components() == 2);
}

TEST_CASE("connectivity yields a spanning forest of the revealed graph") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 40;
    const std::uint64_t t = 30 + gen() % 200;
    const ProcessConfig cfg{n, t, n, gen()};
    ConnectivityStrategy s(n);
    const auto rec = run_strategy(cfg, s, nullptr, {false, true});
    // Independent component count of the revealed graph by DFS.
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& st : rec.trace) {
      adj[st.edge.u].push_back(st.edge.v);
      adj[st.edge.v].push_back(st.edge.u);
    }
    std::vector<char> seen(n, 0);
    std::uint32_t comps = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (seen[v]) continue;
      ++comps;
      std::vector<Vertex> stack = {v};
      seen[v] = 1;
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adj[x]) {
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
        }
      }
    }
    CHECK(s.components() == comps);
    CHECK(rec.edges_bought == n - comps);
    CHECK(count_pattern(rec.purchased, Pattern::triangle()) == 0);
  }
}

TEST_CASE("degree-greedy: stars on H, then triangle-closing edges") {
  const std::uint32_t n = 12;
  StrategyOverrides o;
  o.seed_set_size = 2;
  const auto spec = make_spec(StrategyKind::DegreeGreedy, n, 10, 8, 1, o);
  const std::vector<Edge> stream = {{0, 1}, {5, 6}, {0, 2}, {0, 3}, {2, 3}, {7, 8},
                                    {1, 9}, {4, 5}, {2, 9}, {3, 4}};
  DegreeGreedyStrategy s(spec.params);
  const auto rec = run_strategy({n, 10, 8, 0}, s, nullptr, {false, true}, stream);
  CHECK(rec.trace[0].bought);        // inside H
  CHECK_FALSE(rec.trace[1].bought);  // disjoint from H, closes nothing
  CHECK(rec.trace[4].bought);        // closes 0-2-3
  CHECK_FALSE(rec.trace[5].bought);
  CHECK(rec.edges_bought <= 8);
}

TEST_CASE("budget contract holds for every strategy across random configurations") {
  std::mt19937_64 gen(17);
  const StrategyKind kinds[] = {StrategyKind::K4mShort, StrategyKind::K4mLong,
                                StrategyKind::TkShort,  StrategyKind::TkLong,
                                StrategyKind::Connectivity, StrategyKind::BuyAll,
                                StrategyKind::NeverBuy, StrategyKind::DegreeGreedy};
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t n = 20 + static_cast<std::uint32_t>(gen() % 80);
    const std::uint64_t t = 1 + gen() % pair_count(n);
    const std::uint64_t b = gen() % (t + 20);
    const ProcessConfig cfg{n, t, b, gen()};
    for (auto kind : kinds) {
      const int k = 1 + static_cast<int>(gen() % 3);
      const auto spec = make_spec(kind, n, t, b, k);
      auto s = make_strategy(spec, cfg);
      const auto target = kind == StrategyKind::TkShort || kind == StrategyKind::TkLong
                              ? Pattern::fan(k)
                              : Pattern::k4_minus();
      const TargetDetector det(target);
      TrialRecord rec;
      CHECK_NOTHROW(rec = run_strategy(cfg, *s, &det, {false, false}));
      CHECK(rec.edges_bought <= b);
      CHECK(rec.purchased.edge_count() == rec.edges_bought);
    }
  }
}

TEST_CASE("first-phase purchases stay within r times the cap") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 100 + static_cast<std::uint32_t>(gen() % 200);
    const std::uint64_t t = n + gen() % (3 * n);
    const std::uint64_t b = 10 + gen() % 2000;
    const ProcessConfig cfg{n, t, b, gen()};
    {
      const auto spec = make_spec(StrategyKind::K4mShort, n, t, b, 1);
      auto s = make_strategy(spec, cfg);
      const auto rec = run_strategy(cfg, *s, nullptr, {false, false});
      CHECK(stat(rec.phase_stats, "phase1_bought") <=
            spec.params.seed_set_size * spec.params.per_vertex_cap);
    }
    {
      const auto spec = make_spec(StrategyKind::TkShort, n, t, b, 2);
      auto s = make_strategy(spec, cfg);
      const auto rec = run_strategy(cfg, *s, nullptr, {false, false});
      CHECK(stat(rec.phase_stats, "round0_bought") <=
            spec.params.seed_set_size * spec.params.per_vertex_cap);
    }
  }
}

TEST_CASE("tk-short survivor sets are nested") {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 60;
    const int k = 2 + static_cast<int>(gen() % 3);
    const std::uint64_t t = 100 + gen() % 400;
    const ProcessConfig cfg{n, t, 400, gen()};
    StrategyOverrides o;
    o.seed_set_size = 30;
    const auto spec = make_spec(StrategyKind::TkShort, n, t, 400, k, o);
    TkShortStrategy s(spec.params);
    run_strategy(cfg, s, nullptr, {false, false});
    const auto& hist = s.survivor_history();
    for (std::size_t i = 1; i < hist.size(); ++i) {
      for (Vertex v : hist[i]) {
        CHECK(std::find(hist[i - 1].begin(), hist[i - 1].end(), v) != hist[i - 1].end());
      }
    }
  }
}

TEST_CASE("with b >= t, buy-all dominates the builder strategies on the same stream") {
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t n = 30 + static_cast<std::uint32_t>(gen() % 50);
    const std::uint64_t t = n + gen() % (4 * n);
    const ProcessConfig cfg{n, t, t, gen()};
    for (auto [kind, target] :
         {std::pair{StrategyKind::K4mShort, Pattern::k4_minus()},
          std::pair{StrategyKind::K4mLong, Pattern::k4_minus()},
          std::pair{StrategyKind::TkShort, Pattern::fan(2)},
          std::pair{StrategyKind::TkLong, Pattern::fan(2)}}) {
      const auto spec = make_spec(kind, n, t, t, target.k);
      auto s = make_strategy(spec, cfg);
      const TargetDetector det(target);
      const auto rec = run_strategy(cfg, *s, &det);
      BuyAllStrategy all;
      const auto ref = run_strategy(cfg, all, &det);
      if (rec.success) {
        CHECK(ref.success);
        CHECK(*ref.hit_time <= *rec.hit_time);
      }
    }
  }
}
