#include <doctest.h>

#include <cmath>
#include <numeric>

#include "lisakit/fixtures.hpp"
#include "lisakit/verification.hpp"
#include "support.hpp"

using namespace lisakit;

namespace {

// Four units on the corners of a unit square: every row of V has the same
// sum, so row and global normalization differ only by the factor n.
const std::vector<std::vector<double>> kSquare = {
    {0, 1, M_SQRT2, 1}, {1, 0, 1, M_SQRT2}, {M_SQRT2, 1, 0, 1}, {1, M_SQRT2, 1, 0}};

}  // namespace

TEST_CASE("relative_gap") {
  CHECK(relative_gap(1.0, 1.0) == 0.0);
  CHECK(relative_gap(2.0, 1.0) == doctest::Approx(0.5));
  CHECK(relative_gap(0.0, 0.0) == 0.0);
  CHECK(relative_gap(1e-20, 0.0) == doctest::Approx(1.0));
  CHECK(relative_gap(1.0, 1.1, 100.0) == doctest::Approx(0.001));
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::IdentityHolds) == "Identity-Holds");
  CHECK(to_string(Verdict::ClaimRefutedAsExpected) == "Claim-Refuted-As-Expected");
  CHECK(to_string(Verdict::Unexpected) == "Unexpected");
}

TEST_CASE("identity suite contents") {
  auto r = run_identity_suite(random_instance(8, 3));
  CHECK(r.checks.size() == 11);
  CHECK(r.identities_hold());
  CHECK(r.claims_refuted());  // vacuous: no claims in this suite
  for (const char* id :
       {"sum_mi1_proportional", "local_ratio_set1_set2", "sum_gc1_proportional",
        "sum_gc2_row_coefficient", "sum_mi3_equals_moran",
        "local_ratio_set1_set3_moran", "sum_gc3_equals_geary",
        "local_ratio_set1_set3_geary", "proportionality_coefficients",
        "moran_geary_conversion", "local_geary_from_local_moran"}) {
    CAPTURE(id);
    REQUIRE(r.find(id) != nullptr);
    CHECK(r.find(id)->verdict == Verdict::IdentityHolds);
  }
  CHECK(r.find("sum_mi1_proportional")->chained);
  CHECK_FALSE(r.find("sum_mi3_equals_moran")->chained);
  CHECK(r.find("local_ratio_set1_set3_moran")->worst_unit >= 0);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("refutation audit on the 2000 census") {
  auto r = run_refutation_audit(bth::dataset(2000));
  const auto* mi2 = r.find("claim_sum_mi2_n_moran");
  const auto* gc2 = r.find("claim_sum_gc2_row_geary");
  REQUIRE(mi2 != nullptr);
  REQUIRE(gc2 != nullptr);
  CHECK(mi2->kind == CheckKind::RefutedClaim);
  CHECK(mi2->verdict == Verdict::ClaimRefutedAsExpected);
  CHECK(gc2->verdict == Verdict::ClaimRefutedAsExpected);
  CHECK(mi2->lhs == doctest::Approx(-1.42991574).epsilon(1e-8));
  CHECK(mi2->rhs == doctest::Approx(-1.5479657).epsilon(1e-7));
  CHECK(gc2->lhs == doctest::Approx(30.4883145).epsilon(1e-8));
  CHECK(gc2->rhs == doctest::Approx(32.0446423).epsilon(1e-8));
  CHECK(r.find("sum_mi2_weight_ratio")->verdict == Verdict::IdentityHolds);
  CHECK(r.find("sum_gc2_row_coefficient")->verdict == Verdict::IdentityHolds);
  CHECK(r.claims_refuted());
  CHECK(r.identities_hold());
}

TEST_CASE("merged report keeps one record per id") {
  auto a = analyze(bth::dataset(2010));
  auto all = run_all_checks(a);
  CHECK(all.checks.size() == 14);
  CHECK(all.identities_hold());
  CHECK(all.claims_refuted());
  CHECK(all.context.n == 13);
  CHECK(all.context.gamma == doctest::Approx(123312.10003910199));
}

TEST_CASE("row Geary coefficient") {
  auto a = analyze(bth::dataset(2000));
  double sum_gc2 = std::accumulate(a.lisa.gc2.begin(), a.lisa.gc2.end(), 0.0);
  CHECK(row_geary_coefficient(a) * a.globals.geary_c ==
        doctest::Approx(sum_gc2).epsilon(1e-12));
}

TEST_CASE("claims coincide when all rows of V have the same sum") {
  auto a = analyze(support::dataset(kSquare, {1, 5, 2, 7}));
  auto r = run_all_checks(a);
  CHECK(r.identities_hold());
  CHECK_FALSE(r.claims_refuted());
  CHECK(r.find("claim_sum_mi2_n_moran")->verdict == Verdict::Unexpected);
  CHECK(r.find("claim_sum_gc2_row_geary")->verdict == Verdict::Unexpected);
}

TEST_CASE("the n I claim fails on almost every irregular instance") {
  int refuted = 0;
  const int total = 200;
  for (int k = 0; k < total; ++k) {
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(k);
    auto r = run_refutation_audit(random_instance(3 + k % 28, seed));
    if (r.find("claim_sum_mi2_n_moran")->verdict ==
        Verdict::ClaimRefutedAsExpected) {
      ++refuted;
    }
    CHECK(r.find("sum_mi2_weight_ratio")->verdict == Verdict::IdentityHolds);
  }
  MESSAGE("sum mi2 = n I refuted on " << refuted << " of " << total
                                      << " random instances");
  CHECK(refuted == total);
}

TEST_CASE("Dataset overloads agree with Analysis overloads") {
  auto data = random_instance(7, 11, PowerLaw{2.0});
  auto a = analyze(data);
  auto x = run_identity_suite(data);
  auto y = run_identity_suite(a);
  REQUIRE(x.checks.size() == y.checks.size());
  for (std::size_t i = 0; i < x.checks.size(); ++i) {
    CHECK(x.checks[i].lhs == y.checks[i].lhs);
    CHECK(x.checks[i].rhs == y.checks[i].rhs);
  }
}
