#include "budget_builder/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "budget_builder/errors.hpp"

namespace bb {

SuccessEstimate wilson_estimate(std::uint64_t successes, std::uint64_t trials,
                                double z) {
  if (trials == 0) throw ConfigError("an estimate needs at least one trial");
  if (successes > trials) throw ConfigError("more successes than trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  SuccessEstimate est;
  est.trials = trials;
  est.successes = successes;
  est.p_hat = p;
  // Clamp so rounding never pushes the bounds past p_hat at p in {0, 1}.
  est.ci_low = std::clamp(center - half, 0.0, p);
  est.ci_high = std::clamp(center + half, p, 1.0);
  return est;
}

std::vector<double> isotonic_fit(std::span<const CurveSample> samples) {
  struct Block {
    double value;
    double weight;
    std::size_t count;
  };
  std::vector<Block> blocks;
  for (const auto& s : samples) {
    blocks.push_back({s.p_hat, s.weight, 1});
    while (blocks.size() > 1 &&
           blocks[blocks.size() - 2].value > blocks.back().value) {
      const Block top = blocks.back();
      blocks.pop_back();
      Block& prev = blocks.back();
      const double w = prev.weight + top.weight;
      prev.value = (prev.value * prev.weight + top.value * top.weight) / w;
      prev.weight = w;
      prev.count += top.count;
    }
  }
  std::vector<double> fitted;
  fitted.reserve(samples.size());
  for (const auto& b : blocks) fitted.insert(fitted.end(), b.count, b.value);
  return fitted;
}

std::optional<double> crossover_y(std::vector<CurveSample> samples) {
  std::sort(samples.begin(), samples.end(),
            [](const CurveSample& a, const CurveSample& b) { return a.y < b.y; });
  const auto f = isotonic_fit(samples);

  std::optional<std::size_t> last_below;
  std::optional<std::size_t> first_above;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0.5) last_below = i;
    if (f[i] > 0.5 && !first_above) first_above = i;
  }
  if (!last_below || !first_above) return std::nullopt;

  const auto lo = *last_below;
  const auto hi = *first_above;
  if (hi == lo + 1) {
    const double frac = (0.5 - f[lo]) / (f[hi] - f[lo]);
    return samples[lo].y + frac * (samples[hi].y - samples[lo].y);
  }
  // A plateau at exactly 1/2 lies between them: take its midpoint.
  return 0.5 * (samples[lo + 1].y + samples[hi - 1].y);
}

double ols_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw ConfigError("slope needs at least two paired points");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw ConfigError("slope undefined: xs have no spread");
  return sxy / sxx;
}

}  // namespace bb
