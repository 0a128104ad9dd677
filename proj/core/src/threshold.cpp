#include "budget_builder/threshold.hpp"

#include <algorithm>
#include <cmath>

#include "budget_builder/errors.hpp"

namespace bb {

namespace {

// Exponents (a, c) of n^a / t^c for the short and long branches.
struct Exponents {
  double short_n, short_t;
  double long_n, long_t;
};

Exponents exponents_for(const Pattern& target) {
  switch (target.tag) {
    case PatternTag::K4Minus:
      return {6.0, 4.0, 4.0 / 3.0, 2.0 / 3.0};
    case PatternTag::Triangle:
      return {3.0, 2.0, 1.0, 0.5};
    case PatternTag::TK: {
      const double k = target.k;
      return {4.0 * k - 1.0, 3.0 * k - 1.0, 1.0, 0.5};
    }
    default:
      throw UnsupportedPattern("no budget threshold for " + pattern_name(target));
  }
}

}  // namespace

ThresholdBranches threshold_branches(const Pattern& target, double n, double t) {
  const auto ex = exponents_for(target);
  if (!(n >= 2.0)) throw ConfigError("threshold needs n >= 2");
  if (!(t >= 1.0)) throw ConfigError("threshold needs t >= 1");
  const double ln_n = std::log(n);
  const double ln_t = std::log(t);
  return {std::exp(ex.short_n * ln_n - ex.short_t * ln_t),
          std::exp(ex.long_n * ln_n - ex.long_t * ln_t)};
}

double predicted_budget_threshold(const Pattern& target, double n, double t) {
  const auto br = threshold_branches(target, n, t);
  return std::max(br.short_branch, br.long_branch);
}

double predicted_y_star(const Pattern& target, double x) {
  const auto ex = exponents_for(target);
  return std::max(ex.short_n - ex.short_t * x, ex.long_n - ex.long_t * x);
}

double kink_exponent(const Pattern& target) {
  const auto ex = exponents_for(target);
  return (ex.short_n - ex.long_n) / (ex.short_t - ex.long_t);
}

}  // namespace bb
