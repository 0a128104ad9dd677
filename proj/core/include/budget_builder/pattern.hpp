#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "budget_builder/edge.hpp"

namespace bb {

enum class PatternTag { Triangle, C4, K4Minus, K3Plus, P3, P4, TK, KK2 };

struct Pattern {
  PatternTag tag = PatternTag::Triangle;
  int k = 1;  // fan size for TK, matching size for KK2; ignored otherwise

  static Pattern triangle() { return {PatternTag::Triangle, 1}; }
  static Pattern c4() { return {PatternTag::C4, 1}; }
  static Pattern k4_minus() { return {PatternTag::K4Minus, 1}; }
  static Pattern k3_plus() { return {PatternTag::K3Plus, 1}; }
  static Pattern p3() { return {PatternTag::P3, 1}; }
  static Pattern p4() { return {PatternTag::P4, 1}; }
  static Pattern fan(int k);
  static Pattern matching(int k);

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Number of vertices of the pattern graph.
int pattern_order(const Pattern& p);

// Canonical copy of the pattern on vertices [0, pattern_order(p)).
// T_k: center 0, triangles {0, 2i+1, 2i+2}.
std::vector<Edge> pattern_edges(const Pattern& p);

// "triangle", "c4", "k4m", "k3plus", "p3", "p4", "tk:K", "kk2:K".
std::string pattern_name(const Pattern& p);
// Inverse of pattern_name; "tk" alone means "tk:2". Throws ConfigError.
Pattern parse_pattern(std::string_view text);

}  // namespace bb
