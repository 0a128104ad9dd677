#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bb {

struct SuccessEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
};

inline constexpr double kWilsonZ = 1.96;

// Throws ConfigError when trials == 0 or successes > trials.
SuccessEstimate wilson_estimate(std::uint64_t successes, std::uint64_t trials,
                                double z = kWilsonZ);

// One (y, estimate) sample of a success curve at fixed x.
struct CurveSample {
  double y;
  double p_hat;
  double weight = 1.0;
};

// Weighted isotonic (nondecreasing) fit of p_hat over ascending y, by pool
// adjacent violators. Returns the fitted value per input sample.
std::vector<double> isotonic_fit(std::span<const CurveSample> samples);

// y at which the isotonic fit crosses 1/2, by linear interpolation between
// the bracketing samples. Empty when the fit never goes from below 1/2 to
// above it (e.g. all p_hat = 1). Samples need not be sorted.
std::optional<double> crossover_y(std::vector<CurveSample> samples);

// Least-squares slope of ys on xs. Throws ConfigError with fewer than two
// points or zero spread in xs.
double ols_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace bb
