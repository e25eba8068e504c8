#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lisakit/analysis.hpp"
#include "lisakit/error.hpp"

namespace support {

inline bool rel_close(double a, double b, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= tol * scale;
}

inline bool abs_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

// Error code raised by f, or nullopt if it returned normally.
template <class F>
std::optional<lisakit::ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const lisakit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("u" + std::to_string(i));
  return out;
}

inline lisakit::DistanceMatrix distances(
    const std::vector<std::vector<double>>& rows) {
  return lisakit::DistanceMatrix(labels(rows.size()),
                                 lisakit::SquareMatrix::from_rows(rows));
}

inline lisakit::AttributeVector values(const std::vector<double>& x) {
  return lisakit::AttributeVector(labels(x.size()), x);
}

inline lisakit::Dataset dataset(const std::vector<std::vector<double>>& rows,
                                const std::vector<double>& x,
                                lisakit::KernelSpec kernel = lisakit::InverseDistance{}) {
  return lisakit::Dataset{distances(rows), values(x), kernel};
}

// Three units: d12 = 1, d13 = 2, d23 = 4.
inline const std::vector<std::vector<double>> kTriangle = {
    {0, 1, 2}, {1, 0, 4}, {2, 4, 0}};

}  // namespace support
