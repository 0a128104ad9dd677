#include "budget_builder/pattern.hpp"

#include <charconv>

#include "budget_builder/errors.hpp"

namespace bb {

Pattern Pattern::fan(int k) {
  if (k < 1) throw ConfigError("fan size k must be >= 1");
  return {PatternTag::TK, k};
}

Pattern Pattern::matching(int k) {
  if (k < 1) throw ConfigError("matching size k must be >= 1");
  return {PatternTag::KK2, k};
}

int pattern_order(const Pattern& p) {
  switch (p.tag) {
    case PatternTag::Triangle:
    case PatternTag::P3:
      return 3;
    case PatternTag::C4:
    case PatternTag::K4Minus:
    case PatternTag::K3Plus:
    case PatternTag::P4:
      return 4;
    case PatternTag::TK:
      return 2 * p.k + 1;
    case PatternTag::KK2:
      return 2 * p.k;
  }
  return 0;
}

std::vector<Edge> pattern_edges(const Pattern& p) {
  switch (p.tag) {
    case PatternTag::Triangle:
      return {{0, 1}, {1, 2}, {0, 2}};
    case PatternTag::P3:
      return {{0, 1}, {1, 2}};
    case PatternTag::C4:
      return {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    case PatternTag::K4Minus:
      return {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    case PatternTag::K3Plus:
      return {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    case PatternTag::P4:
      return {{0, 1}, {1, 2}, {2, 3}};
    case PatternTag::TK: {
      std::vector<Edge> out;
      for (int i = 0; i < p.k; ++i) {
        auto a = static_cast<Vertex>(2 * i + 1);
        auto b = static_cast<Vertex>(2 * i + 2);
        out.emplace_back(0, a);
        out.emplace_back(0, b);
        out.emplace_back(a, b);
      }
      return out;
    }
    case PatternTag::KK2: {
      std::vector<Edge> out;
      for (int i = 0; i < p.k; ++i) {
        out.emplace_back(static_cast<Vertex>(2 * i),
                         static_cast<Vertex>(2 * i + 1));
      }
      return out;
    }
  }
  return {};
}

std::string pattern_name(const Pattern& p) {
  switch (p.tag) {
    case PatternTag::Triangle:
      return "triangle";
    case PatternTag::C4:
      return "c4";
    case PatternTag::K4Minus:
      return "k4m";
    case PatternTag::K3Plus:
      return "k3plus";
    case PatternTag::P3:
      return "p3";
    case PatternTag::P4:
      return "p4";
    case PatternTag::TK:
      return "tk:" + std::to_string(p.k);
    case PatternTag::KK2:
      return "kk2:" + std::to_string(p.k);
  }
  return "?";
}

namespace {

int parse_k(std::string_view digits, std::string_view whole) {
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1) {
    throw ConfigError("bad pattern size in '" + std::string(whole) + "'");
  }
  return k;
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  if (text == "triangle") return Pattern::triangle();
  if (text == "c4") return Pattern::c4();
  if (text == "k4m") return Pattern::k4_minus();
  if (text == "k3plus") return Pattern::k3_plus();
  if (text == "p3") return Pattern::p3();
  if (text == "p4") return Pattern::p4();
  if (text == "tk") return Pattern::fan(2);
  if (text.starts_with("tk:")) return Pattern::fan(parse_k(text.substr(3), text));
  if (text.starts_with("kk2:")) {
    return Pattern::matching(parse_k(text.substr(4), text));
  }
  throw ConfigError("unknown pattern '" + std::string(text) + "'");
}

}  // namespace bb
