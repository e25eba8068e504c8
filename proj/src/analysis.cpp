#include "lisakit/analysis.hpp"

#include <random>
#include <string>

#include "lisakit/error.hpp"

namespace lisakit {

void check_same_labels(const DistanceMatrix& d, const AttributeVector& x) {
  if (d.size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(d.size()) + " units in the distance matrix but " +
                    std::to_string(x.size()) + " attribute values");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.labels()[i] != x.labels()[i]) {
      throw Error(ErrorCode::LabelMismatch,
                  "label " + std::to_string(i + 1) + " is '" + x.labels()[i] +
                      "' in the values but '" + d.labels()[i] +
                      "' in the distances");
    }
  }
}

double Analysis::gamma() const noexcept {
  return transforms.sigma2 * contiguity.total();
}

double Analysis::gamma_c() const noexcept {
  const double n = static_cast<double>(size());
  return 2.0 * n * contiguity.total() / (n - 1.0);
}

Analysis analyze(const Dataset& data) {
  check_same_labels(data.distances, data.values);
  auto transforms = transform(data.values);
  auto v = build_contiguity(data.distances, data.kernel);
  auto wg = normalize_global(v);
  auto wr = normalize_row(v);
  auto globals = compute_global_stats(wg, transforms);
  auto table = compute_lisa_table(v, wg, wr, transforms);
  return Analysis{std::move(v),       std::move(wg),     std::move(wr),
                  std::move(transforms), globals, std::move(table)};
}

Dataset random_instance(std::size_t n, std::uint64_t seed,
                        const KernelSpec& kernel) {
  if (n < 3) {
    throw Error(ErrorCode::InvalidArgument,
                "random instances need n >= 3, got " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> distance(1.0, 100.0);
  std::uniform_real_distribution<double> attribute(1.0, 1000.0);

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "u" + std::to_string(i + 1);

  SquareMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d(i, j) = distance(rng);
      d(j, i) = d(i, j);
    }
  }

  std::vector<double> x(n);
  for (;;) {
    for (auto& xi : x) xi = attribute(rng);
    double mean = 0.0;
    for (double xi : x) mean += xi;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double xi : x) ss += (xi - mean) * (xi - mean);
    if (ss > 1e-6) break;
  }

  return Dataset{DistanceMatrix(labels, std::move(d)),
                 AttributeVector(labels, std::move(x)), kernel};
}

}  // namespace lisakit
