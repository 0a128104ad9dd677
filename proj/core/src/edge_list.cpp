#include "budget_builder/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "budget_builder/errors.hpp"

namespace bb {

BuilderGraph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::unordered_set<Edge> seen;
  Vertex max_vertex = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ConfigError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
    std::string rest;
    if (!(fields >> b) || (fields >> rest) || a < 0 || b < 0 ||
        a > 0xFFFFFFFELL || b > 0xFFFFFFFELL) {
      throw ConfigError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
    if (a == b) {
      throw ConfigError("edge list line " + std::to_string(lineno) + ": self-loop");
    }
    const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) {
      throw ConfigError("edge list line " + std::to_string(lineno) +
                        ": repeated edge");
    }
    max_vertex = std::max(max_vertex, e.v);
    edges.push_back(e);
  }
  const std::uint32_t n = edges.empty() ? 0 : max_vertex + 1;
  return BuilderGraph::from_edges(n, edges);
}

BuilderGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

}  // namespace bb
