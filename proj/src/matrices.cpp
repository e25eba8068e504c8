#include "lisakit/matrices.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>
#include <system_error>

#include "lisakit/error.hpp"

namespace lisakit {
namespace {

std::string pair_name(const std::vector<std::string>& labels, std::size_t i,
                      std::size_t j) {
  return "(" + labels[i] + ", " + labels[j] + ")";
}

bool nearly_symmetric(double a, double b) {
  return std::abs(a - b) <=
         kDistanceSymmetryTolerance * std::max(1.0, std::abs(a));
}

std::string shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_parameter(std::string_view text, std::string_view full) {
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidKernel,
                "bad kernel parameter in '" + std::string(full) + "'");
  }
  return value;
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidKernel,
                std::string(what) + " must be a positive finite number, got " +
                    shortest(value));
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, SquareMatrix d)
    : labels_(std::move(labels)), d_(std::move(d)) {
  const std::size_t n = d_.size();
  if (labels_.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(labels_.size()) + " labels for a " +
                    std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  if (n < 2) {
    throw Error(ErrorCode::TooFewUnits,
                "distance matrix needs at least 2 units, got " +
                    std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d_(i, i) != 0.0) {
      throw Error(ErrorCode::NonZeroDiagonal,
                  "distance " + pair_name(labels_, i, i) + " is " +
                      shortest(d_(i, i)) + ", expected 0");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(d_(i, j) > 0.0) || !std::isfinite(d_(i, j))) {
        throw Error(ErrorCode::NonPositiveOffDiagonal,
                    "distance " + pair_name(labels_, i, j) + " is " +
                        shortest(d_(i, j)) + ", must be positive and finite");
      }
      if (j > i && !nearly_symmetric(d_(i, j), d_(j, i))) {
        throw Error(ErrorCode::Asymmetric,
                    "distance " + pair_name(labels_, i, j) + " = " +
                        shortest(d_(i, j)) + " but " +
                        pair_name(labels_, j, i) + " = " + shortest(d_(j, i)));
      }
    }
  }
}

KernelSpec parse_kernel(std::string_view text) {
  if (text == "inverse") return InverseDistance{};
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  if (colon != std::string_view::npos) {
    const auto arg = text.substr(colon + 1);
    if (name == "power") {
      PowerLaw k{parse_parameter(arg, text)};
      require_positive(k.beta, "power exponent");
      return k;
    }
    if (name == "threshold") {
      Threshold k{parse_parameter(arg, text)};
      require_positive(k.radius, "threshold radius");
      return k;
    }
  }
  throw Error(ErrorCode::InvalidKernel,
              "unknown kernel '" + std::string(text) +
                  "' (expected inverse, power:B or threshold:R)");
}

std::string to_string(const KernelSpec& kernel) {
  struct Visitor {
    std::string operator()(InverseDistance) const { return "inverse"; }
    std::string operator()(PowerLaw k) const { return "power:" + shortest(k.beta); }
    std::string operator()(Threshold k) const {
      return "threshold:" + shortest(k.radius);
    }
  };
  return std::visit(Visitor{}, kernel);
}

double apply_kernel(const KernelSpec& kernel, double distance) {
  struct Visitor {
    double d;
    double operator()(InverseDistance) const { return 1.0 / d; }
    double operator()(PowerLaw k) const { return std::pow(d, -k.beta); }
    double operator()(Threshold k) const { return d <= k.radius ? 1.0 : 0.0; }
  };
  return std::visit(Visitor{distance}, kernel);
}

ContiguityMatrix::ContiguityMatrix(std::vector<std::string> labels,
                                   SquareMatrix v, KernelSpec kernel)
    : labels_(std::move(labels)), v_(std::move(v)), kernel_(kernel) {
  const std::size_t n = v_.size();
  if (labels_.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(labels_.size()) + " labels for a " +
                    std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  if (n < 2) {
    throw Error(ErrorCode::TooFewUnits, "contiguity matrix needs at least 2 units");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (v_(i, i) != 0.0) {
      throw Error(ErrorCode::NonZeroDiagonal,
                  "contiguity " + pair_name(labels_, i, i) + " must be 0");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(v_(i, j) >= 0.0) || !std::isfinite(v_(i, j))) {
        throw Error(ErrorCode::InvalidArgument,
                    "contiguity " + pair_name(labels_, i, j) +
                        " must be finite and non-negative");
      }
      if (!nearly_symmetric(v_(i, j), v_(j, i))) {
        throw Error(ErrorCode::Asymmetric,
                    "contiguity " + pair_name(labels_, i, j) + " is not symmetric");
      }
    }
  }
  vi_ = v_.row_sums();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(vi_[i] > 0.0)) {
      throw Error(ErrorCode::EmptyRow,
                  "unit '" + labels_[i] + "' has no neighbours (row sum is 0)");
    }
  }
  // V0 as the sum of row sums keeps sum_i V_i == V0 bit for bit.
  v0_ = std::accumulate(vi_.begin(), vi_.end(), 0.0);
}

ContiguityMatrix build_contiguity(const DistanceMatrix& d,
                                  const KernelSpec& kernel) {
  // Re-validate parameters: a KernelSpec can be built without parse_kernel.
  if (const auto* p = std::get_if<PowerLaw>(&kernel)) {
    require_positive(p->beta, "power exponent");
  } else if (const auto* t = std::get_if<Threshold>(&kernel)) {
    require_positive(t->radius, "threshold radius");
  }
  const std::size_t n = d.size();
  SquareMatrix v(n);
  // Upper triangle mirrored: v is exactly symmetric even when d is only
  // symmetric within tolerance.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double k = apply_kernel(kernel, d(i, j));
      v(i, j) = k;
      v(j, i) = k;
    }
  }
  return ContiguityMatrix(d.labels(), std::move(v), kernel);
}

GlobalWeights normalize_global(const ContiguityMatrix& v) {
  const std::size_t n = v.size();
  const double v0 = v.total();
  SquareMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = v(i, j) / v0;
  }
  return GlobalWeights(std::move(w));
}

RowWeights normalize_row(const ContiguityMatrix& v) {
  const std::size_t n = v.size();
  const auto& vi = v.row_sums();
  SquareMatrix w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(vi[i] > 0.0)) {
      throw Error(ErrorCode::EmptyRow,
                  "unit '" + v.labels()[i] + "' has row sum 0");
    }
    for (std::size_t j = 0; j < n; ++j) w(i, j) = v(i, j) / vi[i];
  }
  return RowWeights(std::move(w));
}

}  // namespace lisakit
