#include "lisakit/global_stats.hpp"

#include "checks.hpp"

namespace lisakit {

double global_moran(const GlobalWeights& wg, const TransformSet& t) {
  detail::require_same_size(wg.size(), t.size(), "global_moran");
  const std::size_t n = t.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double lag = 0.0;
    for (std::size_t j = 0; j < n; ++j) lag += wg(i, j) * t.z[j];
    sum += t.z[i] * lag;
  }
  return sum;
}

double global_geary(const GlobalWeights& wg, const TransformSet& t) {
  detail::require_same_size(wg.size(), t.size(), "global_geary");
  const std::size_t n = t.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double diff = t.zs[i] - t.zs[j];
      row += wg(i, j) * diff * diff;
    }
    sum += row;
  }
  return 0.5 * sum;
}

double weighted_square_sum(const GlobalWeights& wg, const TransformSet& t) {
  detail::require_same_size(wg.size(), t.size(), "weighted_square_sum");
  const std::size_t n = t.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += wg(i, j) * t.z[j] * t.z[j];
    sum += row;
  }
  return sum;
}

IdentitySides moran_geary_identity(const GlobalWeights& wg,
                                   const TransformSet& t) {
  const double n = static_cast<double>(t.size());
  return {global_geary(wg, t),
          (n - 1.0) / n * (weighted_square_sum(wg, t) - global_moran(wg, t))};
}

ExpectedValues expected_values(const GlobalWeights& wg, const TransformSet& t) {
  const double n = static_cast<double>(t.size());
  return {1.0 / (1.0 - n),
          (n - 1.0) / n * weighted_square_sum(wg, t) + 1.0 / n};
}

GlobalStats compute_global_stats(const GlobalWeights& wg,
                                 const TransformSet& t) {
  const auto expected = expected_values(wg, t);
  return {global_moran(wg, t), global_geary(wg, t), expected.i0, expected.c0,
          t.size()};
}

}  // namespace lisakit
