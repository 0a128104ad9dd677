#pragma once

#include <cstdint>
#include <span>

#include "budget_builder/builder_graph.hpp"
#include "budget_builder/pattern.hpp"

namespace bb {

bool contains_triangle(const BuilderGraph& g);
bool contains_c4(const BuilderGraph& g);
// K4- exists iff some edge has two common neighbours.
bool contains_k4_minus(const BuilderGraph& g);
bool contains_k3_plus(const BuilderGraph& g);
// T_k exists iff the link graph of some vertex has a matching of size k.
bool contains_t_k(const BuilderGraph& g, int k);

// Whether adding e (not yet in g) creates a diamond that uses e.
// Throws DuplicateEdge if e is already present.
bool diamond_completing_check(const BuilderGraph& g, const Edge& e);

// Same question after the fact: e is in g; is it part of some diamond?
bool diamond_through_edge(const BuilderGraph& g, const Edge& e);

// Maximum matching in the graph induced on N(v), capped at `cap`.
int link_matching_size(const BuilderGraph& g, Vertex v, int cap);

// P3 inside G[S]: some vertex of S has two neighbours in S.
bool contains_p3_within(const BuilderGraph& g, std::span<const Vertex> S);

// Maximum matching in G[S], capped at `cap`.
int matching_within(const BuilderGraph& g, std::span<const Vertex> S, int cap);

// Unlabeled copies (not induced). Automorphism divisors relative to labeled
// embeddings: triangle 6, C4 8, P3 2, P4 2, K3+ 2.
// Supports TRIANGLE, C4, K3_PLUS, P3, P4; throws UnsupportedPattern otherwise.
std::uint64_t count_pattern(const BuilderGraph& g, const Pattern& p);

// Batch containment for every pattern tag.
bool contains_pattern(const BuilderGraph& g, const Pattern& p);

// Incremental hit detection for the targets a builder aims at.
class TargetDetector {
 public:
  // Supports TRIANGLE, C4, K4_MINUS, K3_PLUS, T_K.
  explicit TargetDetector(Pattern p);

  const Pattern& pattern() const { return pattern_; }

  // e has just been inserted into g. Provided g - e held no copy of the
  // pattern, returns whether g holds one.
  bool hit_after_insert(const BuilderGraph& g, const Edge& e) const;

  bool contains(const BuilderGraph& g) const {
    return contains_pattern(g, pattern_);
  }

 private:
  Pattern pattern_;
};

}  // namespace bb
