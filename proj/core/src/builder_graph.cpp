#include "budget_builder/builder_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "budget_builder/errors.hpp"

namespace bb {

void BuilderGraph::insert(const Edge& e) {
  if (e.u == e.v) throw std::out_of_range("self-loop");
  if (e.v >= adj_.size()) {
    throw std::out_of_range("edge endpoint " + std::to_string(e.v) +
                            " outside graph of " +
                            std::to_string(adj_.size()) + " vertices");
  }
  auto& nu = adj_[e.u];
  auto it = std::lower_bound(nu.begin(), nu.end(), e.v);
  if (it != nu.end() && *it == e.v) {
    throw DuplicateEdge("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") already present");
  }
  nu.insert(it, e.v);
  auto& nv = adj_[e.v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), e.u), e.u);
  ++edge_count_;
}

bool BuilderGraph::has_edge(Vertex a, Vertex b) const {
  if (a == b || a >= adj_.size() || b >= adj_.size()) return false;
  const auto& small = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  Vertex target = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(small.begin(), small.end(), target);
}

std::vector<Edge> BuilderGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex w : adj_[u]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

BuilderGraph BuilderGraph::from_edges(std::uint32_t n,
                                      std::span<const Edge> edges) {
  BuilderGraph g(n);
  for (const auto& e : edges) g.insert(e);
  return g;
}

std::vector<Vertex> common_neighbors(const BuilderGraph& g, Vertex a,
                                     Vertex b) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  std::vector<Vertex> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                        std::back_inserter(out));
  return out;
}

std::uint32_t codegree(const BuilderGraph& g, Vertex a, Vertex b) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  std::uint32_t count = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace bb
