#include "lisakit/variables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lisakit/error.hpp"

namespace lisakit {

AttributeVector::AttributeVector(std::vector<std::string> labels,
                                 std::vector<double> x)
    : labels_(std::move(labels)), x_(std::move(x)) {
  if (labels_.size() != x_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(labels_.size()) + " labels for " +
                    std::to_string(x_.size()) + " values");
  }
  if (x_.size() < 2) {
    throw Error(ErrorCode::TooFewUnits,
                "attribute vector needs at least 2 values, got " +
                    std::to_string(x_.size()));
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "value for '" + labels_[i] + "' is not finite");
    }
  }
}

TransformSet transform(const AttributeVector& x) {
  const auto& v = x.values();
  const std::size_t n = v.size();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  if (*lo == *hi) {
    throw Error(ErrorCode::ZeroVariance,
                "all values are identical; variance is zero");
  }

  TransformSet t;
  t.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
  t.y.resize(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    t.y[i] = v[i] - t.mean;
    ss += t.y[i] * t.y[i];
  }
  if (!(ss > 0.0)) {
    throw Error(ErrorCode::ZeroVariance, "variance underflows to zero");
  }
  t.sigma2 = ss / static_cast<double>(n);
  t.s2 = ss / static_cast<double>(n - 1);

  const double sigma = std::sqrt(t.sigma2);
  const double s = std::sqrt(t.s2);
  t.z.resize(n);
  t.zs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.z[i] = t.y[i] / sigma;
    t.zs[i] = t.y[i] / s;
  }
  return t;
}

std::vector<double> range_normalize(const AttributeVector& x) {
  const auto& v = x.values();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) {
    throw Error(ErrorCode::ZeroRange, "max equals min; range is zero");
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - *lo) / range;
  return out;
}

std::vector<double> global_normalize_vector(const AttributeVector& x) {
  const auto& v = x.values();
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  if (total == 0.0) {
    throw Error(ErrorCode::ZeroSum, "values sum to zero");
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / total;
  return out;
}

}  // namespace lisakit
