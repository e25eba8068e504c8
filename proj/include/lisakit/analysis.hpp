#pragma once

#include <cstdint>

#include "lisakit/global_stats.hpp"
#include "lisakit/lisa.hpp"
#include "lisakit/matrices.hpp"
#include "lisakit/variables.hpp"

namespace lisakit {

/// Distances plus one attribute column over the same units.
struct Dataset {
  DistanceMatrix distances;
  AttributeVector values;
  KernelSpec kernel = InverseDistance{};
};

/// Throws LabelMismatch when labels differ in content or order.
void check_same_labels(const DistanceMatrix& d, const AttributeVector& x);

/// Every intermediate of one run, built once.
struct Analysis {
  ContiguityMatrix contiguity;
  GlobalWeights global_weights;
  RowWeights row_weights;
  TransformSet transforms;
  GlobalStats globals;
  LisaTable lisa;

  std::size_t size() const noexcept { return transforms.size(); }
  double gamma() const noexcept;    ///< sigma^2 V0
  double gamma_c() const noexcept;  ///< 2 n V0 / (n - 1)
};

Analysis analyze(const Dataset& data);

/// Deterministic synthetic dataset: distances uniform in [1, 100] on the upper
/// triangle mirrored to the lower one, attributes uniform in [1, 1000].
/// Throws InvalidArgument for n < 3.
Dataset random_instance(std::size_t n, std::uint64_t seed,
                        const KernelSpec& kernel = InverseDistance{});

}  // namespace lisakit
