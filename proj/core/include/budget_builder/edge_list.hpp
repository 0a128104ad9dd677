#pragma once

#include <iosfwd>
#include <string>

#include "budget_builder/builder_graph.hpp"

namespace bb {

// Lines "u v" of 0-based decimal vertices; '#' starts a comment, blank lines
// are skipped. The graph has max vertex + 1 vertices. Throws ConfigError on a
// malformed line, a self-loop or a repeated edge, naming the line number.
BuilderGraph read_edge_list(std::istream& in);
BuilderGraph read_edge_list_file(const std::string& path);

}  // namespace bb
