#pragma once

// Local indicators of spatial association, three formulations.
//
//   set 1  raw contiguity V, centralized y            mi1, gc1
//   set 2  row-normalized W*, population z-scores      mi2, gc2
//   set 3  globally normalized W, z (Moran) / zs (Geary)  mi3, gc3
//
// Sets 1 and 3 differ by a constant factor per statistic. Set 2 differs
// from set 1 by sigma^2 V_i, which changes from unit to unit.

#include <string>
#include <vector>

#include "lisakit/matrices.hpp"
#include "lisakit/variables.hpp"

namespace lisakit {

/// mi1[i] = y_i sum_j v_ij y_j
std::vector<double> mi1(const ContiguityMatrix& v, const TransformSet& t);
/// mi2[i] = z_i sum_j w*_ij z_j
std::vector<double> mi2(const RowWeights& wr, const TransformSet& t);
/// mi3[i] = z_i sum_j w_ij z_j
std::vector<double> mi3(const GlobalWeights& wg, const TransformSet& t);

/// gc1[i] = sum_j v_ij (y_i - y_j)^2
std::vector<double> gc1(const ContiguityMatrix& v, const TransformSet& t);
/// gc2[i] = (1/sigma^2) sum_j w*_ij (y_i - y_j)^2
std::vector<double> gc2(const RowWeights& wr, const TransformSet& t);
/// gc3[i] = 1/2 sum_j w_ij (zs_i - zs_j)^2
std::vector<double> gc3(const GlobalWeights& wg, const TransformSet& t);

/// Local Geary from local Moran:
/// ((n-1)/(2n)) (sum_j w_ij (z_i^2 + z_j^2) - 2 mi3[i]).
std::vector<double> gc3_from_mi3(const GlobalWeights& wg, const TransformSet& t,
                                 const std::vector<double>& local_moran);

/// Local Geary written with population z-scores:
/// ((n-1)/(2n)) sum_j w_ij (z_i - z_j)^2.
std::vector<double> gc3_population_form(const GlobalWeights& wg,
                                        const TransformSet& t);

struct LisaTable {
  std::vector<std::string> labels;
  std::vector<double> mi1, mi2, mi3;
  std::vector<double> gc1, gc2, gc3;
  std::vector<double> ratio12;  ///< sigma^2 V_i
  double ratio13 = 0.0;         ///< sigma^2 V0
  double gratio13 = 0.0;        ///< 2 s^2 V0
};

struct Ratios {
  std::vector<double> ratio12;
  double ratio13 = 0.0;
  double gratio13 = 0.0;
  /// Largest relative disagreement between the analytic ratios and the
  /// observed mi1/mi2, gc1/gc2, mi1/mi3 and gc1/gc3 over all units.
  double max_relative_gap = 0.0;
};

/// Units whose denominator is smaller than this times sigma^2 V0 are checked
/// in product form (num == ratio * den) instead of by division.
inline constexpr double kRatioDenominatorFloor = 1e-12;

Ratios ratios(const LisaTable& lt, const TransformSet& t,
              const ContiguityMatrix& v);

/// All six local vectors plus the ratios, in input label order.
LisaTable compute_lisa_table(const ContiguityMatrix& v, const GlobalWeights& wg,
                             const RowWeights& wr, const TransformSet& t);

}  // namespace lisakit
