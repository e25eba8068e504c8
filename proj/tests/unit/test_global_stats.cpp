#include <doctest.h>

#include "lisakit/global_stats.hpp"
#include "support.hpp"

using namespace lisakit;
using doctest::Approx;

namespace {

struct Prepared {
  ContiguityMatrix v;
  GlobalWeights wg;
  TransformSet t;
};

Prepared prepare(const std::vector<std::vector<double>>& d,
                 const std::vector<double>& x, KernelSpec kernel) {
  auto v = build_contiguity(support::distances(d), kernel);
  auto wg = normalize_global(v);
  return {std::move(v), std::move(wg), transform(support::values(x))};
}

}  // namespace

TEST_CASE("two units with opposite values") {
  auto p = prepare({{0, 3}, {3, 0}}, {5, 9}, InverseDistance{});
  CHECK(global_moran(p.wg, p.t) == Approx(-1.0));
  CHECK(global_geary(p.wg, p.t) == Approx(1.0));
  CHECK(weighted_square_sum(p.wg, p.t) == Approx(1.0));
  auto sides = moran_geary_identity(p.wg, p.t);
  CHECK(sides.lhs == Approx(1.0));
  CHECK(sides.rhs == Approx(1.0));
  auto e = expected_values(p.wg, p.t);
  CHECK(e.i0 == Approx(-1.0));
  CHECK(e.c0 == Approx(1.0));
}

TEST_CASE("three units under a power kernel") {
  auto p = prepare(support::kTriangle, {0, 1, 2}, PowerLaw{2.0});
  CHECK(global_moran(p.wg, p.t) == Approx(-2.0 / 7.0).epsilon(1e-12));
  CHECK(global_geary(p.wg, p.t) == Approx(11.0 / 14.0).epsilon(1e-12));
  CHECK(weighted_square_sum(p.wg, p.t) == Approx(25.0 / 28.0).epsilon(1e-12));
  auto g = compute_global_stats(p.wg, p.t);
  CHECK(g.n == 3);
  CHECK(g.expected_i == Approx(-0.5));
  CHECK(g.expected_c == Approx(2.0 / 3.0 * 25.0 / 28.0 + 1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("Moran-Geary conversion holds on random data") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const KernelSpec kernel =
        seed % 2 ? KernelSpec{InverseDistance{}} : KernelSpec{PowerLaw{1.7}};
    auto data = random_instance(3 + seed % 28, seed, kernel);
    auto v = build_contiguity(data.distances, kernel);
    auto wg = normalize_global(v);
    auto t = transform(data.values);
    auto sides = moran_geary_identity(wg, t);
    CAPTURE(seed);
    CHECK(support::rel_close(sides.lhs, sides.rhs, 1e-9));
  }
}

TEST_CASE("globals depend only on the standardized values") {
  auto a = prepare(support::kTriangle, {3, 8, 4}, InverseDistance{});
  auto b = prepare(support::kTriangle, {3 * 2.5 - 40, 8 * 2.5 - 40, 4 * 2.5 - 40},
                   InverseDistance{});
  CHECK(support::rel_close(global_moran(a.wg, a.t), global_moran(b.wg, b.t), 1e-12));
  CHECK(support::rel_close(global_geary(a.wg, a.t), global_geary(b.wg, b.t), 1e-12));
}

TEST_CASE("globals are unchanged by scaling the contiguity matrix") {
  auto a = prepare(support::kTriangle, {3, 8, 4}, PowerLaw{1.0});
  std::vector<std::vector<double>> half = support::kTriangle;
  for (auto& row : half)
    for (auto& d : row) d *= 0.5;
  auto b = prepare(half, {3, 8, 4}, PowerLaw{1.0});  // V doubles
  CHECK(support::rel_close(global_moran(a.wg, a.t), global_moran(b.wg, b.t), 1e-12));
  CHECK(support::rel_close(global_geary(a.wg, a.t), global_geary(b.wg, b.t), 1e-12));
}

TEST_CASE("size mismatch is rejected") {
  auto p = prepare(support::kTriangle, {0, 1, 2}, InverseDistance{});
  auto t2 = transform(support::values({1, 2}));
  CHECK(support::error_code([&] { global_moran(p.wg, t2); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(support::error_code([&] { global_geary(p.wg, t2); }) ==
        ErrorCode::DimensionMismatch);
}
