#include <doctest.h>

#include <cmath>
#include <limits>

#include "lisakit/matrices.hpp"
#include "support.hpp"

using namespace lisakit;
using support::error_code;

TEST_CASE("SquareMatrix basics") {
  auto m = SquareMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(m.size() == 2);
  CHECK(m(1, 0) == 3);
  CHECK(m.total() == 10);
  CHECK(m.row_sums() == std::vector<double>{3, 7});
  CHECK(m.to_rows() == std::vector<std::vector<double>>{{1, 2}, {3, 4}});
  CHECK(m.row(1)[1] == 4);
  CHECK(error_code([] { SquareMatrix::from_rows({{1, 2}, {3}}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("DistanceMatrix validation") {
  SUBCASE("accepts a symmetric matrix with zero diagonal") {
    auto d = support::distances(support::kTriangle);
    CHECK(d.size() == 3);
    CHECK(d(2, 1) == 4);
    CHECK(d.labels().front() == "u0");
  }
  SUBCASE("too few units") {
    CHECK(error_code([] { support::distances({{0}}); }) == ErrorCode::TooFewUnits);
  }
  SUBCASE("nonzero diagonal") {
    CHECK(error_code([] { support::distances({{1, 2}, {2, 0}}); }) ==
          ErrorCode::NonZeroDiagonal);
  }
  SUBCASE("zero or negative off-diagonal") {
    CHECK(error_code([] { support::distances({{0, 0}, {0, 0}}); }) ==
          ErrorCode::NonPositiveOffDiagonal);
    CHECK(error_code([] { support::distances({{0, -1}, {-1, 0}}); }) ==
          ErrorCode::NonPositiveOffDiagonal);
  }
  SUBCASE("non-finite entry") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(error_code([&] { support::distances({{0, inf}, {inf, 0}}); }) ==
          ErrorCode::NonPositiveOffDiagonal);
  }
  SUBCASE("asymmetric") {
    CHECK(error_code([] { support::distances({{0, 1}, {2, 0}}); }) ==
          ErrorCode::Asymmetric);
  }
  SUBCASE("rounding-level asymmetry is tolerated") {
    CHECK_NOTHROW(support::distances({{0, 100.0}, {100.0 + 1e-12, 0}}));
  }
  SUBCASE("label count must match") {
    CHECK(error_code([] {
            DistanceMatrix({"a"}, SquareMatrix::from_rows({{0, 1}, {1, 0}}));
          }) == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("kernel parsing") {
  CHECK(parse_kernel("inverse") == KernelSpec{InverseDistance{}});
  CHECK(parse_kernel("power:2") == KernelSpec{PowerLaw{2.0}});
  CHECK(parse_kernel("threshold:150.5") == KernelSpec{Threshold{150.5}});
  CHECK(to_string(parse_kernel("power:1.5")) == "power:1.5");
  CHECK(to_string(KernelSpec{InverseDistance{}}) == "inverse");
  for (const char* bad : {"", "gauss", "power", "power:", "power:0", "power:-2",
                          "power:abc", "threshold:0", "threshold:-1", "inverse:2"}) {
    CAPTURE(bad);
    CHECK(error_code([&] { parse_kernel(bad); }) == ErrorCode::InvalidKernel);
  }
}

TEST_CASE("kernel values") {
  CHECK(apply_kernel(InverseDistance{}, 4.0) == doctest::Approx(0.25));
  CHECK(apply_kernel(PowerLaw{2.0}, 4.0) == doctest::Approx(0.0625));
  CHECK(apply_kernel(PowerLaw{1.0}, 8.0) == apply_kernel(InverseDistance{}, 8.0));
  CHECK(apply_kernel(Threshold{3.0}, 3.0) == 1.0);
  CHECK(apply_kernel(Threshold{3.0}, 3.5) == 0.0);
}

TEST_CASE("contiguity from a power kernel") {
  auto v = build_contiguity(support::distances(support::kTriangle), PowerLaw{2.0});
  CHECK(v(0, 1) == doctest::Approx(1.0));
  CHECK(v(0, 2) == doctest::Approx(0.25));
  CHECK(v(1, 2) == doctest::Approx(0.0625));
  CHECK(v(2, 1) == v(1, 2));
  CHECK(v(1, 1) == 0.0);
  CHECK(v.total() == doctest::Approx(2.625));
  CHECK(v.row_sums()[0] == doctest::Approx(1.25));
  CHECK(v.row_sums()[1] == doctest::Approx(1.0625));
  CHECK(v.row_sums()[2] == doctest::Approx(0.3125));
}

TEST_CASE("threshold kernel leaving a unit isolated") {
  auto d = support::distances(support::kTriangle);
  CHECK(error_code([&] { build_contiguity(d, Threshold{1.5}); }) ==
        ErrorCode::EmptyRow);
  CHECK_NOTHROW(build_contiguity(d, Threshold{2.0}));
}

TEST_CASE("ContiguityMatrix validation") {
  const auto labels = support::labels(2);
  CHECK(error_code([&] {
          ContiguityMatrix(labels, SquareMatrix::from_rows({{0, 1}, {2, 0}}),
                           InverseDistance{});
        }) == ErrorCode::Asymmetric);
  CHECK(error_code([&] {
          ContiguityMatrix(labels, SquareMatrix::from_rows({{1, 1}, {1, 0}}),
                           InverseDistance{});
        }) == ErrorCode::NonZeroDiagonal);
  CHECK(error_code([&] {
          ContiguityMatrix(labels, SquareMatrix::from_rows({{0, 0}, {0, 0}}),
                           InverseDistance{});
        }) == ErrorCode::EmptyRow);
}

TEST_CASE("global normalization keeps symmetry and sums to one") {
  auto v = build_contiguity(support::distances(support::kTriangle), PowerLaw{2.0});
  auto w = normalize_global(v);
  CHECK(w.values().total() == doctest::Approx(1.0));
  CHECK(w(0, 1) == doctest::Approx(1.0 / 2.625));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(w(i, j) == w(j, i));
  }
}

TEST_CASE("row normalization gives unit row sums and breaks symmetry") {
  auto v = build_contiguity(support::distances(support::kTriangle), PowerLaw{2.0});
  auto w = normalize_row(v);
  for (double s : w.values().row_sums()) CHECK(s == doctest::Approx(1.0));
  CHECK(w(0, 1) == doctest::Approx(0.8));
  CHECK(w(1, 0) == doctest::Approx(1.0 / 1.0625));
  CHECK(w(0, 1) != doctest::Approx(w(1, 0)));
}

TEST_CASE("normalizations on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto data = random_instance(3 + seed % 12, seed);
    auto v = build_contiguity(data.distances, data.kernel);
    auto wg = normalize_global(v);
    auto wr = normalize_row(v);
    CHECK(support::rel_close(wg.values().total(), 1.0, 1e-12));
    for (double s : wr.values().row_sums()) CHECK(support::rel_close(s, 1.0, 1e-12));
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        CHECK(wg(i, j) == wg(j, i));
        // W* = (V0 / V_i) W
        CHECK(support::rel_close(wr(i, j) * v.row_sums()[i], wg(i, j) * v.total(),
                                 1e-12));
      }
    }
  }
}
