#include "budget_builder/oracle.hpp"

#include <bit>
#include <string>
#include <vector>

#include "budget_builder/errors.hpp"

namespace bb::oracle {

SmallGraph::SmallGraph(std::uint32_t n) : n_(n) {
  if (n > kMaxVertices) {
    throw SizeError("oracle graphs are limited to 16 vertices, got " +
                    std::to_string(n));
  }
}

SmallGraph SmallGraph::from_edges(std::uint32_t n, std::span<const Edge> edges) {
  SmallGraph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

SmallGraph SmallGraph::from(const BuilderGraph& bg) {
  SmallGraph g(bg.vertex_count());
  for (const auto& e : bg.edges()) g.add_edge(e.u, e.v);
  return g;
}

void SmallGraph::add_edge(Vertex a, Vertex b) {
  if (a == b || a >= n_ || b >= n_) throw ConfigError("bad oracle edge");
  adj_[a] |= static_cast<std::uint16_t>(1U << b);
  adj_[b] |= static_cast<std::uint16_t>(1U << a);
}

namespace {

// Pattern as adjacency masks, vertices ordered so each one after the first
// touches an earlier one where possible (keeps the search pruned early).
struct PatternMasks {
  int order;
  std::vector<std::uint32_t> adj;
};

PatternMasks masks_for(const Pattern& p) {
  PatternMasks m{pattern_order(p), {}};
  m.adj.assign(static_cast<std::size_t>(m.order), 0);
  for (const auto& e : pattern_edges(p)) {
    m.adj[e.u] |= 1U << e.v;
    m.adj[e.v] |= 1U << e.u;
  }
  return m;
}

class EmbeddingCounter {
 public:
  EmbeddingCounter(const PatternMasks& pat, std::uint32_t host_n,
                   std::vector<std::uint32_t> host_adj, bool stop_at_first)
      : pat_(pat),
        host_n_(host_n),
        host_(std::move(host_adj)),
        image_(static_cast<std::size_t>(pat.order), 0),
        stop_(stop_at_first) {}

  std::uint64_t run() {
    extend(0, 0);
    return count_;
  }

 private:
  void extend(int depth, std::uint32_t used) {
    if (stop_ && count_ > 0) return;
    if (depth == pat_.order) {
      ++count_;
      return;
    }
    for (std::uint32_t h = 0; h < host_n_; ++h) {
      if ((used >> h) & 1U) continue;
      bool ok = true;
      for (int prev = 0; prev < depth && ok; ++prev) {
        if ((pat_.adj[static_cast<std::size_t>(depth)] >> prev) & 1U) {
          ok = (host_[h] >> image_[static_cast<std::size_t>(prev)]) & 1U;
        }
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(depth)] = h;
      extend(depth + 1, used | (1U << h));
    }
  }

  const PatternMasks& pat_;
  std::uint32_t host_n_;
  std::vector<std::uint32_t> host_;
  std::vector<std::uint32_t> image_;
  bool stop_;
  std::uint64_t count_ = 0;
};

std::vector<std::uint32_t> host_rows(const SmallGraph& g) {
  std::vector<std::uint32_t> rows(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) rows[v] = g.row(v);
  return rows;
}

std::uint64_t embeddings(const SmallGraph& g, const Pattern& p, bool first_only) {
  auto pat = masks_for(p);
  if (pat.order > static_cast<int>(g.vertex_count())) return 0;
  return EmbeddingCounter(pat, g.vertex_count(), host_rows(g), first_only).run();
}

void enumerate_matchings(const std::vector<Edge>& edges, std::size_t from,
                         std::uint32_t used, int size, int& best) {
  if (size > best) best = size;
  const int free_vertices = 16 - std::popcount(used);
  if (size + free_vertices / 2 <= best) return;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const std::uint32_t bits = (1U << e.u) | (1U << e.v);
    if (used & bits) continue;
    enumerate_matchings(edges, i + 1, used | bits, size + 1, best);
  }
}

}  // namespace

std::uint64_t count_embeddings(const SmallGraph& g, const Pattern& p) {
  return embeddings(g, p, false);
}

std::uint64_t automorphism_count(const Pattern& p) {
  auto pat = masks_for(p);
  // Pattern graphs can exceed 16 vertices only for large k; not needed here.
  if (pat.order > static_cast<int>(kMaxVertices)) {
    throw SizeError("pattern too large for the oracle");
  }
  return EmbeddingCounter(pat, static_cast<std::uint32_t>(pat.order), pat.adj,
                          false)
      .run();
}

bool brute_contains(const SmallGraph& g, const Pattern& p) {
  return embeddings(g, p, true) > 0;
}

std::uint64_t brute_count(const SmallGraph& g, const Pattern& p) {
  return count_embeddings(g, p) / automorphism_count(p);
}

int brute_max_matching(const SmallGraph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  int best = 0;
  // Vertices beyond n count as used so the free-vertex bound stays tight.
  const std::uint32_t absent =
      g.vertex_count() >= 16 ? 0U : (~0U << g.vertex_count()) & 0xFFFFU;
  enumerate_matchings(edges, 0, absent, 0, best);
  return best;
}

}  // namespace bb::oracle
