#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <utility>

namespace bb {

using Vertex = std::uint32_t;

// Unordered vertex pair stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.u << ',' << e.v << ')';
}

inline constexpr std::uint64_t pair_count(std::uint64_t n) {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

// Colexicographic rank of {u < v} among all pairs: v(v-1)/2 + u.
inline std::uint64_t pair_index(const Edge& e) {
  return static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
}

inline Edge pair_from_index(std::uint64_t idx) {
  auto v = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (v * (v - 1) / 2 > idx) --v;
  while ((v + 1) * v / 2 <= idx) ++v;
  return Edge(static_cast<Vertex>(idx - v * (v - 1) / 2),
              static_cast<Vertex>(v));
}

}  // namespace bb

template <>
struct std::hash<bb::Edge> {
  std::size_t operator()(const bb::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(e.u) << 32) | e.v);
  }
};
