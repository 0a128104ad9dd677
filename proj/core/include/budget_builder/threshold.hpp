#pragma once

#include "budget_builder/pattern.hpp"

namespace bb {

// The two competing terms of b*(n, t); the threshold is their maximum.
//   K4-:  n^6 / t^4          and  n^{4/3} / t^{2/3}
//   T_k:  n^{4k-1} / t^{3k-1} and  n / sqrt(t)       (TRIANGLE is T_1)
struct ThresholdBranches {
  double short_branch;
  double long_branch;
};

// Throws UnsupportedPattern for targets other than K4-, T_k and TRIANGLE,
// ConfigError unless n >= 2 and t >= 1. Evaluated in log space.
ThresholdBranches threshold_branches(const Pattern& target, double n, double t);

double predicted_budget_threshold(const Pattern& target, double n, double t);

// log_n b*(n, n^x), the exponent curve of the phase diagram.
double predicted_y_star(const Pattern& target, double x);

// x at which the two branches meet: 7/5 for K4-, 4/3 for every T_k.
double kink_exponent(const Pattern& target);

}  // namespace bb
