#pragma once

#include <cstddef>

#include "lisakit/matrices.hpp"
#include "lisakit/variables.hpp"

namespace lisakit {

struct GlobalStats {
  double moran_i = 0.0;
  double geary_c = 0.0;
  double expected_i = 0.0;  ///< 1 / (1 - n)
  double expected_c = 0.0;
  std::size_t n = 0;
};

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ExpectedValues {
  double i0 = 0.0;
  double c0 = 0.0;
};

/// I = sum_ij w_ij z_i z_j.
double global_moran(const GlobalWeights& wg, const TransformSet& t);

/// C = 1/2 sum_ij w_ij (zs_i - zs_j)^2.
double global_geary(const GlobalWeights& wg, const TransformSet& t);

/// 1' W z^2 = sum_ij w_ij z_j^2, with z^2 taken elementwise.
///
/// The all-ones vector appears under two names in the Moran/Geary
/// conversion and in the expected-Geary formula; both are this sum.
double weighted_square_sum(const GlobalWeights& wg, const TransformSet& t);

/// lhs = C, rhs = ((n-1)/n) (1' W z^2 - I).
IdentitySides moran_geary_identity(const GlobalWeights& wg,
                                   const TransformSet& t);

/// i0 = 1/(1-n); c0 = ((n-1)/n) 1' W z^2 + 1/n.
ExpectedValues expected_values(const GlobalWeights& wg, const TransformSet& t);

GlobalStats compute_global_stats(const GlobalWeights& wg,
                                 const TransformSet& t);

}  // namespace lisakit
