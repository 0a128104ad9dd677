#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "budget_builder/builder_graph.hpp"
#include "budget_builder/edge.hpp"
#include "budget_builder/pattern.hpp"

// Exhaustive ground truth on graphs of at most 16 vertices, for tests and
// calibration only. Shares nothing with detect.cpp beyond the Pattern
// definitions.
namespace bb::oracle {

inline constexpr std::uint32_t kMaxVertices = 16;

class SmallGraph {
 public:
  // Throws SizeError for n > 16.
  explicit SmallGraph(std::uint32_t n);

  static SmallGraph from_edges(std::uint32_t n, std::span<const Edge> edges);
  static SmallGraph from(const BuilderGraph& g);

  std::uint32_t vertex_count() const { return n_; }
  void add_edge(Vertex a, Vertex b);
  bool adjacent(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1U; }
  std::uint16_t row(Vertex v) const { return adj_[v]; }

 private:
  std::uint32_t n_;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

// Labeled embeddings: injections V(p) -> V(g) mapping edges to edges.
std::uint64_t count_embeddings(const SmallGraph& g, const Pattern& p);

// |Aut(p)|, computed as embeddings of p into itself.
std::uint64_t automorphism_count(const Pattern& p);

bool brute_contains(const SmallGraph& g, const Pattern& p);

// Unlabeled copies: embeddings / |Aut(p)|.
std::uint64_t brute_count(const SmallGraph& g, const Pattern& p);

// Maximum matching by enumerating matchings edge by edge.
int brute_max_matching(const SmallGraph& g);

}  // namespace bb::oracle
