#pragma once

// Spatial proximity -> contiguity -> weight matrices.
//
// A DistanceMatrix is validated on construction (square, zero diagonal,
// symmetric, strictly positive off the diagonal). A kernel turns it into a
// ContiguityMatrix, which is then normalized either globally (entries sum to
// one, symmetry kept) or by row (every row sums to one, symmetry lost).
// The two normalizations are distinct types so that statistics defined only
// for one of them cannot be fed the other.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lisakit/square_matrix.hpp"

namespace lisakit {

/// Relative tolerance used when checking d[i][j] == d[j][i].
inline constexpr double kDistanceSymmetryTolerance = 1e-9;

class DistanceMatrix {
 public:
  /// Throws Error with TooFewUnits, DimensionMismatch, NonZeroDiagonal,
  /// Asymmetric or NonPositiveOffDiagonal.
  DistanceMatrix(std::vector<std::string> labels, SquareMatrix d);

  std::size_t size() const noexcept { return d_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const SquareMatrix& values() const noexcept { return d_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return d_(i, j);
  }

 private:
  std::vector<std::string> labels_;
  SquareMatrix d_;
};

struct InverseDistance {
  bool operator==(const InverseDistance&) const = default;
};
struct PowerLaw {
  double beta = 1.0;
  bool operator==(const PowerLaw&) const = default;
};
struct Threshold {
  double radius = 0.0;
  bool operator==(const Threshold&) const = default;
};

using KernelSpec = std::variant<InverseDistance, PowerLaw, Threshold>;

/// Parses "inverse", "power:B" or "threshold:R". Throws InvalidKernel.
KernelSpec parse_kernel(std::string_view text);
std::string to_string(const KernelSpec& kernel);
double apply_kernel(const KernelSpec& kernel, double distance);

class ContiguityMatrix {
 public:
  ContiguityMatrix(std::vector<std::string> labels, SquareMatrix v,
                   KernelSpec kernel);

  std::size_t size() const noexcept { return v_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const SquareMatrix& values() const noexcept { return v_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return v_(i, j);
  }
  /// Sum of all entries (V0).
  double total() const noexcept { return v0_; }
  /// Row sums (V_i).
  const std::vector<double>& row_sums() const noexcept { return vi_; }
  const KernelSpec& kernel() const noexcept { return kernel_; }

 private:
  std::vector<std::string> labels_;
  SquareMatrix v_;
  double v0_ = 0.0;
  std::vector<double> vi_;
  KernelSpec kernel_;
};

enum class Normalization { Global, Row };

template <Normalization N>
class WeightMatrix {
 public:
  static constexpr Normalization norm = N;

  explicit WeightMatrix(SquareMatrix w) : w_(std::move(w)) {}

  std::size_t size() const noexcept { return w_.size(); }
  const SquareMatrix& values() const noexcept { return w_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return w_(i, j);
  }

 private:
  SquareMatrix w_;
};

using GlobalWeights = WeightMatrix<Normalization::Global>;
using RowWeights = WeightMatrix<Normalization::Row>;

/// v[i][j] = kernel(d[i][j]) off the diagonal, 0 on it.
/// Throws InvalidKernel for a non-positive parameter and EmptyRow when a
/// unit ends up with no neighbours (threshold kernel).
ContiguityMatrix build_contiguity(const DistanceMatrix& d,
                                  const KernelSpec& kernel);

/// w[i][j] = v[i][j] / V0.
GlobalWeights normalize_global(const ContiguityMatrix& v);

/// w*[i][j] = v[i][j] / V_i. Throws EmptyRow when some V_i is zero.
RowWeights normalize_row(const ContiguityMatrix& v);

}  // namespace lisakit
