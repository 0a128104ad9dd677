#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "budget_builder/edge.hpp"

namespace bb {

// Simple undirected graph on vertices [0, n) with sorted adjacency lists.
class BuilderGraph {
 public:
  BuilderGraph() = default;
  explicit BuilderGraph(std::uint32_t n) : adj_(n) {}

  std::uint32_t vertex_count() const {
    return static_cast<std::uint32_t>(adj_.size());
  }
  std::uint64_t edge_count() const { return edge_count_; }

  // Throws DuplicateEdge if present, std::out_of_range on bad endpoints or
  // a self-loop.
  void insert(const Edge& e);

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(adj_[v].size());
  }

  std::vector<Edge> edges() const;

  static BuilderGraph from_edges(std::uint32_t n, std::span<const Edge> edges);

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::uint64_t edge_count_ = 0;
};

// Sorted intersection N(a) ∩ N(b).
std::vector<Vertex> common_neighbors(const BuilderGraph& g, Vertex a, Vertex b);
std::uint32_t codegree(const BuilderGraph& g, Vertex a, Vertex b);

}  // namespace bb
