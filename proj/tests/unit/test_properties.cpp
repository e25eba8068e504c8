#include <doctest.h>

#include "lisakit/verification.hpp"
#include "support.hpp"

using namespace lisakit;
using support::rel_close;

namespace {

Dataset affine(const Dataset& d, double a, double b) {
  auto x = d.values.values();
  for (auto& xi : x) xi = a * xi + b;
  return Dataset{d.distances, AttributeVector(d.values.labels(), std::move(x)),
                 d.kernel};
}

Dataset scaled_distances(const Dataset& d, double factor) {
  auto m = d.distances.values();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m(i, j) *= factor;
  return Dataset{DistanceMatrix(d.distances.labels(), std::move(m)), d.values,
                 d.kernel};
}

}  // namespace

TEST_CASE("affine changes of the attribute") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto base_data = random_instance(4 + seed, seed);
    const auto base = analyze(base_data);
    for (double a : {0.5, 3.0, -2.0}) {
      const auto moved = analyze(affine(base_data, a, 250.0));
      CAPTURE(seed);
      CAPTURE(a);
      CHECK(rel_close(moved.globals.moran_i, base.globals.moran_i, 1e-9));
      CHECK(rel_close(moved.globals.geary_c, base.globals.geary_c, 1e-9));
      for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(rel_close(moved.lisa.mi2[i], base.lisa.mi2[i], 1e-9));
        CHECK(rel_close(moved.lisa.mi3[i], base.lisa.mi3[i], 1e-9));
        CHECK(rel_close(moved.lisa.gc2[i], base.lisa.gc2[i], 1e-9));
        CHECK(rel_close(moved.lisa.gc3[i], base.lisa.gc3[i], 1e-9));
        CHECK(rel_close(moved.lisa.mi1[i], a * a * base.lisa.mi1[i], 1e-9));
        CHECK(rel_close(moved.lisa.gc1[i], a * a * base.lisa.gc1[i], 1e-9));
      }
    }
  }
}

TEST_CASE("rescaling distances under the inverse kernel") {
  // d -> k d divides V by k: normalized sets are unchanged, set 1 scales by 1/k.
  const auto data = random_instance(9, 77);
  const auto base = analyze(data);
  const auto far = analyze(scaled_distances(data, 4.0));
  CHECK(rel_close(far.contiguity.total(), base.contiguity.total() / 4.0, 1e-12));
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(rel_close(far.lisa.mi2[i], base.lisa.mi2[i], 1e-9));
    CHECK(rel_close(far.lisa.mi3[i], base.lisa.mi3[i], 1e-9));
    CHECK(rel_close(far.lisa.gc3[i], base.lisa.gc3[i], 1e-9));
    CHECK(rel_close(far.lisa.mi1[i], base.lisa.mi1[i] / 4.0, 1e-9));
  }
}

TEST_CASE("relabelling units permutes the results") {
  const auto data = random_instance(6, 31);
  const std::vector<std::size_t> perm = {3, 0, 5, 1, 4, 2};
  SquareMatrix d(6);
  std::vector<double> x(6);
  std::vector<std::string> labels(6);
  for (std::size_t i = 0; i < 6; ++i) {
    x[i] = data.values.values()[perm[i]];
    labels[i] = data.values.labels()[perm[i]];
    for (std::size_t j = 0; j < 6; ++j) d(i, j) = data.distances(perm[i], perm[j]);
  }
  const auto base = analyze(data);
  const auto shuffled =
      analyze(Dataset{DistanceMatrix(labels, d), AttributeVector(labels, x)});
  CHECK(rel_close(shuffled.globals.moran_i, base.globals.moran_i, 1e-12));
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(rel_close(shuffled.lisa.mi2[i], base.lisa.mi2[perm[i]], 1e-12));
    CHECK(rel_close(shuffled.lisa.gc3[i], base.lisa.gc3[perm[i]], 1e-12));
  }
}

TEST_CASE("identity suite across sizes and kernels") {
  for (std::size_t n = 3; n <= 30; ++n) {
    for (const KernelSpec& k : {KernelSpec{InverseDistance{}}, KernelSpec{PowerLaw{0.5}},
                                KernelSpec{PowerLaw{3.0}}, KernelSpec{Threshold{80.0}}}) {
      Dataset data = random_instance(n, 900 + n, k);
      VerificationReport r;
      try {
        r = run_identity_suite(data);
      } catch (const Error& e) {
        // A threshold can isolate a unit in small random layouts.
        CHECK(e.code() == ErrorCode::EmptyRow);
        continue;
      }
      CAPTURE(n);
      CAPTURE(to_string(k));
      CHECK(r.identities_hold());
    }
  }
}

TEST_CASE("analysis rejects mismatched inputs") {
  auto d = support::distances(support::kTriangle);
  CHECK(support::error_code([&] {
          analyze(Dataset{d, support::values({1, 2})});
        }) == ErrorCode::DimensionMismatch);
  CHECK(support::error_code([&] {
          analyze(Dataset{d, AttributeVector({"u0", "u2", "u1"}, {1, 2, 3})});
        }) == ErrorCode::LabelMismatch);
  CHECK(support::error_code([] { random_instance(2, 1); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("random instances are reproducible") {
  auto a = random_instance(10, 42);
  auto b = random_instance(10, 42);
  auto c = random_instance(10, 43);
  CHECK(a.distances.values() == b.distances.values());
  CHECK(a.values.values() == b.values.values());
  CHECK_FALSE(a.values.values() == c.values.values());
}
