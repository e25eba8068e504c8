#include "lisakit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lisakit {
namespace {

double sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

double abs_sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

CheckRecord identity(std::string id, std::string equation,
                     std::string description, double lhs, double rhs,
                     double scale, double tolerance) {
  CheckRecord c;
  c.id = std::move(id);
  c.equation = std::move(equation);
  c.description = std::move(description);
  c.kind = CheckKind::Identity;
  c.chained = tolerance > kSingleStepTolerance;
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_gap = std::abs(lhs - rhs);
  c.rel_gap = relative_gap(lhs, rhs, scale);
  c.tolerance = tolerance;
  c.verdict =
      c.rel_gap <= tolerance ? Verdict::IdentityHolds : Verdict::Unexpected;
  return c;
}

CheckRecord refuted_claim(std::string id, std::string equation,
                          std::string description, double lhs, double rhs) {
  CheckRecord c;
  c.id = std::move(id);
  c.equation = std::move(equation);
  c.description = std::move(description);
  c.kind = CheckKind::RefutedClaim;
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_gap = std::abs(lhs - rhs);
  c.rel_gap = relative_gap(lhs, rhs);
  c.tolerance = kRefutationThreshold;
  c.verdict = c.rel_gap > kRefutationThreshold ? Verdict::ClaimRefutedAsExpected
                                               : Verdict::Unexpected;
  return c;
}

// Worst unit of a family of per-unit equalities lhs(i) == rhs(i).
template <class Lhs, class Rhs>
CheckRecord per_unit(std::string id, std::string equation,
                     std::string description, std::size_t n, Lhs lhs, Rhs rhs) {
  std::size_t worst = 0;
  double worst_gap = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = relative_gap(lhs(i), rhs(i));
    if (gap > worst_gap) {
      worst_gap = gap;
      worst = i;
    }
  }
  auto c = identity(std::move(id), std::move(equation), std::move(description),
                    lhs(worst), rhs(worst), 0.0, kSingleStepTolerance);
  c.worst_unit = static_cast<long>(worst);
  return c;
}

// sum_ij m_ij (zs_i - zs_j)^2
template <class M>
double weighted_sample_dispersion(const M& m, const TransformSet& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const double diff = t.zs[i] - t.zs[j];
      s += m(i, j) * diff * diff;
    }
  }
  return s;
}

// sum_ij m_ij z_i z_j
template <class M>
double weighted_cross(const M& m, const TransformSet& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) s += m(i, j) * t.z[i] * t.z[j];
  }
  return s;
}

ReportContext context_of(const Analysis& a) {
  ReportContext ctx;
  ctx.n = a.size();
  ctx.v0 = a.contiguity.total();
  ctx.sigma2 = a.transforms.sigma2;
  ctx.s2 = a.transforms.s2;
  ctx.gamma = a.gamma();
  ctx.gamma_c = a.gamma_c();
  ctx.gamma_c_row = row_geary_coefficient(a);
  ctx.moran_i = a.globals.moran_i;
  ctx.geary_c = a.globals.geary_c;
  return ctx;
}

CheckRecord row_geary_check(const Analysis& a) {
  const auto& lt = a.lisa;
  return identity("sum_gc2_row_coefficient", "30-31",
                  "sum gc2 = gamma*_c C with the data-dependent row coefficient",
                  sum(lt.gc2), row_geary_coefficient(a) * a.globals.geary_c,
                  abs_sum(lt.gc2), kChainedTolerance);
}

void sort_by_id(std::vector<CheckRecord>& checks) {
  std::sort(checks.begin(), checks.end(),
            [](const auto& x, const auto& y) { return x.id < y.id; });
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::IdentityHolds: return "Identity-Holds";
    case Verdict::ClaimRefutedAsExpected: return "Claim-Refuted-As-Expected";
    case Verdict::Unexpected: return "Unexpected";
  }
  return "Unexpected";
}

double relative_gap(double lhs, double rhs, double scale) noexcept {
  const double gap = std::abs(lhs - rhs);
  const double denom = std::max({std::abs(lhs), std::abs(rhs), scale});
  return denom == 0.0 ? gap : gap / denom;
}

double row_geary_coefficient(const Analysis& a) {
  const double n = static_cast<double>(a.size());
  const auto& t = a.transforms;
  return 2.0 * n / (n - 1.0) * weighted_sample_dispersion(a.row_weights, t) /
         weighted_sample_dispersion(a.global_weights, t);
}

bool VerificationReport::identities_hold() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) {
    return c.kind != CheckKind::Identity || c.verdict == Verdict::IdentityHolds;
  });
}

bool VerificationReport::claims_refuted() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) {
    return c.kind != CheckKind::RefutedClaim ||
           c.verdict == Verdict::ClaimRefutedAsExpected;
  });
}

const CheckRecord* VerificationReport::find(std::string_view id) const noexcept {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const auto& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks) {
    if (find(c.id) == nullptr) checks.push_back(c);
  }
  sort_by_id(checks);
}

VerificationReport run_identity_suite(const Analysis& a) {
  const auto& lt = a.lisa;
  const auto& t = a.transforms;
  const auto& g = a.globals;
  const std::size_t n = a.size();
  const double nd = static_cast<double>(n);
  const double v0 = a.contiguity.total();
  const auto& vi = a.contiguity.row_sums();

  VerificationReport r;
  r.context = context_of(a);
  auto& c = r.checks;

  c.push_back(identity("sum_mi1_proportional", "8",
                       "sum mi1 = sigma^2 V0 I", sum(lt.mi1), a.gamma() * g.moran_i,
                       abs_sum(lt.mi1), kChainedTolerance));

  // Ratio of set 1 to set 2 is sigma^2 V_i for both statistics; the
  // product form stays meaningful where a local value is zero.
  {
    auto lhs = [&](std::size_t i) { return lt.mi1[i] * lt.gc2[i]; };
    auto rhs = [&](std::size_t i) { return lt.gc1[i] * lt.mi2[i]; };
    auto cross = per_unit("local_ratio_set1_set2", "20, 32",
                          "mi1/mi2 = gc1/gc2 = sigma^2 V_i", n, lhs, rhs);
    auto moran = per_unit("", "", "", n,
                          [&](std::size_t i) { return lt.mi1[i]; },
                          [&](std::size_t i) { return t.sigma2 * vi[i] * lt.mi2[i]; });
    auto geary = per_unit("", "", "", n,
                          [&](std::size_t i) { return lt.gc1[i]; },
                          [&](std::size_t i) { return t.sigma2 * vi[i] * lt.gc2[i]; });
    for (const auto* other : {&moran, &geary}) {
      if (other->rel_gap > cross.rel_gap) {
        cross.lhs = other->lhs;
        cross.rhs = other->rhs;
        cross.abs_gap = other->abs_gap;
        cross.rel_gap = other->rel_gap;
        cross.worst_unit = other->worst_unit;
        cross.verdict = other->verdict;
      }
    }
    c.push_back(cross);
  }

  c.push_back(identity("sum_gc1_proportional", "26",
                       "sum gc1 = gamma_c sigma^2 C", sum(lt.gc1),
                       a.gamma_c() * t.sigma2 * g.geary_c, abs_sum(lt.gc1),
                       kChainedTolerance));
  c.push_back(row_geary_check(a));
  c.push_back(identity("sum_mi3_equals_moran", "34", "sum mi3 = I", sum(lt.mi3),
                       g.moran_i, abs_sum(lt.mi3), kSingleStepTolerance));
  c.push_back(per_unit(
      "local_ratio_set1_set3_moran", "35", "mi1 = sigma^2 V0 mi3", n,
      [&](std::size_t i) { return lt.mi1[i]; },
      [&](std::size_t i) { return t.sigma2 * v0 * lt.mi3[i]; }));
  c.push_back(identity("sum_gc3_equals_geary", "37", "sum gc3 = C", sum(lt.gc3),
                       g.geary_c, abs_sum(lt.gc3), kSingleStepTolerance));
  c.push_back(per_unit(
      "local_ratio_set1_set3_geary", "39", "gc1 = 2 s^2 V0 gc3", n,
      [&](std::size_t i) { return lt.gc1[i]; },
      [&](std::size_t i) { return 2.0 * t.s2 * v0 * lt.gc3[i]; }));
  {
    auto rec = identity("proportionality_coefficients", "40",
                        "gamma_c sigma^2 = 2 s^2 V0", a.gamma_c() * t.sigma2,
                        2.0 * t.s2 * v0, 0.0, 1e-12);
    rec.chained = false;
    c.push_back(rec);
  }
  {
    const auto sides = moran_geary_identity(a.global_weights, t);
    const double w_z2 = weighted_square_sum(a.global_weights, t);
    c.push_back(identity("moran_geary_conversion", "41",
                         "C = ((n-1)/n) (1'Wz^2 - I)", sides.lhs, sides.rhs,
                         (nd - 1.0) / nd * (w_z2 + std::abs(g.moran_i)),
                         kSingleStepTolerance));
  }
  {
    const auto converted = gc3_from_mi3(a.global_weights, t, lt.mi3);
    c.push_back(per_unit(
        "local_geary_from_local_moran", "44",
        "gc3 = ((n-1)/2n) (sum_j w_ij (z_i^2 + z_j^2) - 2 mi3)", n,
        [&](std::size_t i) { return lt.gc3[i]; },
        [&](std::size_t i) { return converted[i]; }));
  }

  sort_by_id(c);
  return r;
}

VerificationReport run_identity_suite(const Dataset& data) {
  return run_identity_suite(analyze(data));
}

VerificationReport run_refutation_audit(const Analysis& a) {
  const auto& lt = a.lisa;
  const auto& g = a.globals;
  const double n = static_cast<double>(a.size());

  VerificationReport r;
  r.context = context_of(a);
  auto& c = r.checks;

  c.push_back(refuted_claim("claim_sum_mi2_n_moran", "16",
                            "claimed: sum mi2 = n I", sum(lt.mi2), n * g.moran_i));
  {
    const double row = weighted_cross(a.row_weights, a.transforms);
    const double global = weighted_cross(a.global_weights, a.transforms);
    const double rhs = global == 0.0 ? row : row / global * g.moran_i;
    c.push_back(identity("sum_mi2_weight_ratio", "18",
                         "sum mi2 = (sum w* z z / sum w z z) I", sum(lt.mi2), rhs,
                         abs_sum(lt.mi2), kSingleStepTolerance));
  }
  c.push_back(refuted_claim("claim_sum_gc2_row_geary", "29",
                            "claimed: sum gc2 = 2 n^2 C / (n - 1)", sum(lt.gc2),
                            2.0 * n * n / (n - 1.0) * g.geary_c));
  c.push_back(row_geary_check(a));

  sort_by_id(c);
  return r;
}

VerificationReport run_refutation_audit(const Dataset& data) {
  return run_refutation_audit(analyze(data));
}

VerificationReport run_all_checks(const Analysis& a) {
  auto r = run_identity_suite(a);
  r.merge(run_refutation_audit(a));
  return r;
}

}  // namespace lisakit
