#include "budget_builder/detect.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "budget_builder/errors.hpp"

namespace bb {

namespace {

// Exact maximum matching on a small local graph, stopping once `cap` is
// reached. Branches on a minimum-degree vertex u over its neighbours: some
// maximum matching always covers a non-isolated vertex, so no "leave u
// unmatched" branch is needed.
class CappedMatcher {
 public:
  CappedMatcher(std::vector<std::vector<int>> adj, int cap)
      : adj_(std::move(adj)), alive_(adj_.size(), 1), cap_(cap) {}

  int solve() {
    if (cap_ <= 0) return 0;
    int greedy = greedy_size();
    if (greedy >= cap_) return cap_;
    best_ = greedy;
    search(0, static_cast<int>(adj_.size()));
    return std::min(best_, cap_);
  }

 private:
  int greedy_size() const {
    std::vector<char> used(adj_.size(), 0);
    int size = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (used[u]) continue;
      for (int w : adj_[u]) {
        if (!used[w]) {
          used[u] = used[w] = 1;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  int alive_degree(int u) const {
    int d = 0;
    for (int w : adj_[u]) d += alive_[w];
    return d;
  }

  void search(int current, int alive_count) {
    if (current > best_) best_ = current;
    if (best_ >= cap_) return;
    if (current + alive_count / 2 <= best_) return;

    int pick = -1;
    int pick_degree = 0;
    std::vector<int> isolated;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (!alive_[u]) continue;
      int d = alive_degree(static_cast<int>(u));
      if (d == 0) {
        isolated.push_back(static_cast<int>(u));
      } else if (pick < 0 || d < pick_degree) {
        pick = static_cast<int>(u);
        pick_degree = d;
      }
    }
    if (pick < 0) return;
    for (int u : isolated) alive_[u] = 0;
    const int remaining = alive_count - static_cast<int>(isolated.size());

    alive_[pick] = 0;
    for (int w : adj_[pick]) {
      if (!alive_[w]) continue;
      alive_[w] = 0;
      search(current + 1, remaining - 2);
      alive_[w] = 1;
      if (best_ >= cap_) break;
      // A pendant vertex's edge is always safe; no need to try others.
      if (pick_degree == 1) break;
    }
    alive_[pick] = 1;
    for (int u : isolated) alive_[u] = 1;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<char> alive_;
  int cap_;
  int best_ = 0;
};

// Induced subgraph on `verts` (sorted, distinct) relabelled to 0..m-1.
std::vector<std::vector<int>> induced_local(const BuilderGraph& g,
                                            std::span<const Vertex> verts) {
  std::vector<std::vector<int>> adj(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto nbrs = g.neighbors(verts[i]);
    // Walk the two sorted lists together.
    std::size_t a = 0;
    std::size_t j = 0;
    while (a < nbrs.size() && j < verts.size()) {
      if (nbrs[a] < verts[j]) {
        ++a;
      } else if (verts[j] < nbrs[a]) {
        ++j;
      } else {
        if (j != i) adj[i].push_back(static_cast<int>(j));
        ++a;
        ++j;
      }
    }
  }
  return adj;
}

std::vector<Vertex> sorted_unique(std::span<const Vertex> S) {
  std::vector<Vertex> v(S.begin(), S.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::uint64_t choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::uint64_t count_triangles(const BuilderGraph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w) total += codegree(g, u, w);
    }
  }
  return total / 3;
}

// Σ over unordered pairs {u, w} of C(codeg, 2); each C4 is seen from both of
// its diagonals.
std::uint64_t count_c4(const BuilderGraph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::uint32_t> cnt(n, 0);
  std::vector<Vertex> touched;
  std::uint64_t total = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex x : g.neighbors(u)) {
      for (Vertex w : g.neighbors(x)) {
        if (w <= u) continue;
        if (cnt[w]++ == 0) touched.push_back(w);
      }
    }
    for (Vertex w : touched) {
      total += choose2(cnt[w]);
      cnt[w] = 0;
    }
    touched.clear();
  }
  return total / 2;
}

std::uint64_t count_k3_plus(const BuilderGraph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : common_neighbors(g, u, v)) {
        if (w <= v) continue;
        total += (g.degree(u) - 2) + (g.degree(v) - 2) + (g.degree(w) - 2);
      }
    }
  }
  return total;
}

std::uint64_t count_p3(const BuilderGraph& g) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) total += choose2(g.degree(v));
  return total;
}

std::uint64_t count_p4(const BuilderGraph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) {
        total += static_cast<std::uint64_t>(g.degree(u) - 1) * (g.degree(v) - 1);
      }
    }
  }
  return total - 3 * count_triangles(g);
}

bool c4_through_edge(const BuilderGraph& g, const Edge& e) {
  for (Vertex x : g.neighbors(e.u)) {
    if (x == e.v) continue;
    for (Vertex y : g.neighbors(e.v)) {
      if (y == e.u || y == x) continue;
      if (g.has_edge(x, y)) return true;
    }
  }
  return false;
}

// u is in a triangle avoiding `other`.
bool triangle_at_avoiding(const BuilderGraph& g, Vertex u, Vertex other) {
  auto nu = g.neighbors(u);
  for (Vertex a : nu) {
    if (a == other) continue;
    for (Vertex b : nu) {
      if (b <= a || b == other) continue;
      if (g.has_edge(a, b)) return true;
    }
  }
  return false;
}

bool k3_plus_through_edge(const BuilderGraph& g, const Edge& e) {
  for (Vertex w : common_neighbors(g, e.u, e.v)) {
    if (g.degree(e.u) >= 3 || g.degree(e.v) >= 3 || g.degree(w) >= 3) {
      return true;
    }
  }
  return triangle_at_avoiding(g, e.u, e.v) || triangle_at_avoiding(g, e.v, e.u);
}

}  // namespace

bool contains_triangle(const BuilderGraph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && codegree(g, u, w) > 0) return true;
    }
  }
  return false;
}

bool contains_c4(const BuilderGraph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    bool found = false;
    for (Vertex x : g.neighbors(u)) {
      for (Vertex w : g.neighbors(x)) {
        if (w <= u) continue;
        if (seen[w]) {
          found = true;
          break;
        }
        seen[w] = 1;
        touched.push_back(w);
      }
      if (found) break;
    }
    for (Vertex w : touched) seen[w] = 0;
    touched.clear();
    if (found) return true;
  }
  return false;
}

bool contains_k4_minus(const BuilderGraph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && codegree(g, u, w) >= 2) return true;
    }
  }
  return false;
}

bool contains_k3_plus(const BuilderGraph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : common_neighbors(g, u, v)) {
        if (g.degree(u) >= 3 || g.degree(v) >= 3 || g.degree(w) >= 3) {
          return true;
        }
      }
    }
  }
  return false;
}

bool contains_t_k(const BuilderGraph& g, int k) {
  if (k < 1) throw ConfigError("fan size k must be >= 1");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < static_cast<std::uint32_t>(2 * k)) continue;
    if (link_matching_size(g, v, k) >= k) return true;
  }
  return false;
}

bool diamond_completing_check(const BuilderGraph& g, const Edge& e) {
  if (g.has_edge(e)) {
    throw DuplicateEdge("diamond_completing_check: edge already present");
  }
  auto common = common_neighbors(g, e.u, e.v);
  // e as the shared edge of two triangles.
  if (common.size() >= 2) return true;
  // e as a side edge: triangle {u, v, w} glued to another triangle along uw
  // or vw. In g + e, v joins N(u) ∩ N(w), so one more common neighbour of u
  // and w in g suffices (and symmetrically).
  for (Vertex w : common) {
    if (codegree(g, e.u, w) >= 1 || codegree(g, e.v, w) >= 1) return true;
  }
  return false;
}

bool diamond_through_edge(const BuilderGraph& g, const Edge& e) {
  auto common = common_neighbors(g, e.u, e.v);
  if (common.size() >= 2) return true;
  for (Vertex w : common) {
    if (codegree(g, e.u, w) >= 2 || codegree(g, e.v, w) >= 2) return true;
  }
  return false;
}

int link_matching_size(const BuilderGraph& g, Vertex v, int cap) {
  auto nbrs = g.neighbors(v);
  if (cap <= 0 || nbrs.size() < 2) return 0;
  CappedMatcher m(induced_local(g, nbrs), cap);
  return m.solve();
}

bool contains_p3_within(const BuilderGraph& g, std::span<const Vertex> S) {
  auto verts = sorted_unique(S);
  auto adj = induced_local(g, verts);
  return std::any_of(adj.begin(), adj.end(),
                     [](const auto& a) { return a.size() >= 2; });
}

int matching_within(const BuilderGraph& g, std::span<const Vertex> S, int cap) {
  auto verts = sorted_unique(S);
  if (cap <= 0 || verts.size() < 2) return 0;
  CappedMatcher m(induced_local(g, verts), cap);
  return m.solve();
}

std::uint64_t count_pattern(const BuilderGraph& g, const Pattern& p) {
  switch (p.tag) {
    case PatternTag::Triangle:
      return count_triangles(g);
    case PatternTag::C4:
      return count_c4(g);
    case PatternTag::K3Plus:
      return count_k3_plus(g);
    case PatternTag::P3:
      return count_p3(g);
    case PatternTag::P4:
      return count_p4(g);
    default:
      throw UnsupportedPattern("count_pattern does not support " +
                               pattern_name(p));
  }
}

bool contains_pattern(const BuilderGraph& g, const Pattern& p) {
  switch (p.tag) {
    case PatternTag::Triangle:
      return contains_triangle(g);
    case PatternTag::C4:
      return contains_c4(g);
    case PatternTag::K4Minus:
      return contains_k4_minus(g);
    case PatternTag::K3Plus:
      return contains_k3_plus(g);
    case PatternTag::P3:
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= 2) return true;
      }
      return false;
    case PatternTag::P4:
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(u)) {
          if (u >= v) continue;
          std::uint64_t paths =
              static_cast<std::uint64_t>(g.degree(u) - 1) * (g.degree(v) - 1);
          if (paths > codegree(g, u, v)) return true;
        }
      }
      return false;
    case PatternTag::TK:
      return contains_t_k(g, p.k);
    case PatternTag::KK2: {
      std::vector<Vertex> all(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
      return matching_within(g, all, p.k) >= p.k;
    }
  }
  return false;
}

TargetDetector::TargetDetector(Pattern p) : pattern_(p) {
  switch (p.tag) {
    case PatternTag::Triangle:
    case PatternTag::C4:
    case PatternTag::K4Minus:
    case PatternTag::K3Plus:
      break;
    case PatternTag::TK:
      if (p.k < 1) throw ConfigError("fan size k must be >= 1");
      break;
    default:
      throw UnsupportedPattern("no incremental detector for " + pattern_name(p));
  }
}

bool TargetDetector::hit_after_insert(const BuilderGraph& g,
                                      const Edge& e) const {
  switch (pattern_.tag) {
    case PatternTag::Triangle:
      return codegree(g, e.u, e.v) > 0;
    case PatternTag::C4:
      return c4_through_edge(g, e);
    case PatternTag::K4Minus:
      return diamond_through_edge(g, e);
    case PatternTag::K3Plus:
      return k3_plus_through_edge(g, e);
    case PatternTag::TK: {
      const int k = pattern_.k;
      // Any new fan uses e either as a spoke (center u or v) or as a link
      // edge (center a common neighbour).
      if (link_matching_size(g, e.u, k) >= k) return true;
      if (link_matching_size(g, e.v, k) >= k) return true;
      for (Vertex w : common_neighbors(g, e.u, e.v)) {
        if (link_matching_size(g, w, k) >= k) return true;
      }
      return false;
    }
    default:
      return false;
  }
}

}  // namespace bb
