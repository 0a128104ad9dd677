#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "budget_builder/builder_graph.hpp"
#include "budget_builder/edge_list.hpp"
#include "budget_builder/errors.hpp"
#include "budget_builder/pattern.hpp"
#include "budget_builder/rng.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace bb;

TEST_CASE("edges are stored canonically") {
  const Edge e(5, 2);
  CHECK(e.u == 2);
  CHECK(e.v == 5);
  CHECK(e == Edge(2, 5));
  CHECK(e.contains(5));
  CHECK(e.other(5) == 2);
}

TEST_CASE("pair index is a bijection onto [0, C(n,2))") {
  const std::uint32_t n = 60;
  std::set<std::uint64_t> seen;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto idx = pair_index({u, v});
      CHECK(idx < pair_count(n));
      CHECK(pair_from_index(idx) == Edge(u, v));
      seen.insert(idx);
    }
  }
  CHECK(seen.size() == pair_count(n));
  // Far beyond the sizes used here, where sqrt rounding matters.
  const Edge big(123456, 4000000);
  CHECK(pair_from_index(pair_index(big)) == big);
}

TEST_CASE("rng is deterministic and substreams differ") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  Rng s0 = Rng::substream(7, 0), s1 = Rng::substream(7, 1);
  CHECK(s0() != s1());
  CHECK(derive_seed({1, 2}) != derive_seed({2, 1}));
}

TEST_CASE("rng below() is bounded and roughly uniform") {
  Rng r(3);
  const int bound = 7;
  const int draws = 70000;
  int counts[bound] = {};
  for (int i = 0; i < draws; ++i) {
    const auto x = r.below(bound);
    REQUIRE(x < static_cast<std::uint64_t>(bound));
    ++counts[x];
  }
  // 5 sigma around draws / bound.
  const double mean = draws / double(bound);
  const double sigma = std::sqrt(draws * (1.0 / bound) * (1 - 1.0 / bound));
  for (int c : counts) CHECK(std::abs(c - mean) < 5 * sigma);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("insert_edge examples") {
  BuilderGraph g(3);
  g.insert({0, 1});
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);

  SUBCASE("closing a path gives a triangle") {
    g.insert({1, 2});
    g.insert({0, 2});
    CHECK(g.edge_count() == 3);
    CHECK(codegree(g, 0, 1) == 1);
  }
  SUBCASE("duplicate insert throws") {
    CHECK_THROWS_AS(g.insert({1, 0}), DuplicateEdge);
  }
  SUBCASE("self-loop and out-of-range endpoints throw") {
    CHECK_THROWS_AS(g.insert({2, 2}), std::out_of_range);
    CHECK_THROWS_AS(g.insert({0, 3}), std::out_of_range);
  }
}

TEST_CASE("adjacency stays sorted and symmetric; edge_count is half the degree sum") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto edges = bbtest::random_edges(15, 0.3, gen);
    const auto g = BuilderGraph::from_edges(15, edges);
    std::uint64_t degree_sum = 0;
    for (Vertex v = 0; v < 15; ++v) {
      const auto nb = g.neighbors(v);
      degree_sum += nb.size();
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) CHECK(g.has_edge(w, v));
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(g.edge_count() == edges.size());
  }
}

TEST_CASE("common neighbours") {
  const auto g = BuilderGraph::from_edges(5, bbtest::complete_graph(4));
  const auto c = common_neighbors(g, 0, 1);
  CHECK(c == std::vector<Vertex>{2, 3});
  CHECK(codegree(g, 0, 4) == 0);
}

TEST_CASE("pattern names round-trip") {
  for (const auto& p : {Pattern::triangle(), Pattern::c4(), Pattern::k4_minus(),
                        Pattern::k3_plus(), Pattern::p3(), Pattern::p4(),
                        Pattern::fan(3), Pattern::matching(2)}) {
    CHECK(parse_pattern(pattern_name(p)) == p);
  }
  CHECK(parse_pattern("tk") == Pattern::fan(2));
  CHECK_THROWS_AS(parse_pattern("k5"), ConfigError);
  CHECK_THROWS_AS(parse_pattern("tk:0"), ConfigError);
  CHECK_THROWS_AS(Pattern::fan(0), ConfigError);
}

TEST_CASE("pattern graphs have the expected shape") {
  CHECK(pattern_order(Pattern::k4_minus()) == 4);
  CHECK(pattern_edges(Pattern::k4_minus()).size() == 5);
  CHECK(pattern_order(Pattern::fan(3)) == 7);
  CHECK(pattern_edges(Pattern::fan(3)).size() == 9);
  CHECK(pattern_edges(Pattern::k3_plus()).size() == 4);
  CHECK(pattern_edges(Pattern::matching(3)).size() == 3);
  CHECK(pattern_order(Pattern::matching(3)) == 6);
}

TEST_CASE("edge list reader") {
  std::istringstream in("# diamond\n0 1\n0 2\n\n1 2  # chord\n1 3\n2 3\n");
  const auto g = read_edge_list(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);

  std::istringstream bad("0 1\n0 x\n");
  CHECK_THROWS_WITH_AS(read_edge_list(bad), doctest::Contains("line 2"), ConfigError);
  std::istringstream loop("3 3\n");
  CHECK_THROWS_AS(read_edge_list(loop), ConfigError);
  std::istringstream repeated("0 1\n1 0\n");
  CHECK_THROWS_AS(read_edge_list(repeated), ConfigError);
  std::istringstream extra("0 1 2\n");
  CHECK_THROWS_AS(read_edge_list(extra), ConfigError);
}
