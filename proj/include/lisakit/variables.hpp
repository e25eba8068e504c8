#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lisakit {

/// Size variable observed at each unit. Needs at least two units; a
/// positive variance is only required by transform().
class AttributeVector {
 public:
  AttributeVector(std::vector<std::string> labels, std::vector<double> x);

  std::size_t size() const noexcept { return x_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& values() const noexcept { return x_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> x_;
};

/// Centralized and z-scored forms of one attribute vector.
///
/// Moran statistics use the population-standardized `z` (divisor n) and
/// Geary statistics use the sample-standardized `zs` (divisor n - 1). Both
/// are always present so a caller never has to pick.
struct TransformSet {
  std::vector<double> y;   ///< x - mean
  std::vector<double> z;   ///< y / sigma
  std::vector<double> zs;  ///< y / s
  double mean = 0.0;
  double sigma2 = 0.0;     ///< (1/n) sum y^2
  double s2 = 0.0;         ///< (1/(n-1)) sum y^2

  std::size_t size() const noexcept { return y.size(); }
};

/// Two-pass mean/variance. Throws ZeroVariance when all values coincide.
TransformSet transform(const AttributeVector& x);

/// (x - min) / (max - min). Throws ZeroRange.
std::vector<double> range_normalize(const AttributeVector& x);

/// x / sum(x). Throws ZeroSum.
std::vector<double> global_normalize_vector(const AttributeVector& x);

}  // namespace lisakit
