#include "lisakit/lisa.hpp"

#include <algorithm>
#include <cmath>

#include "checks.hpp"

namespace lisakit {
namespace {

// out[i] = a[i] * sum_j m(i, j) b[j]
template <class M>
std::vector<double> cross_product(const M& m, const std::vector<double>& a,
                                  const std::vector<double>& b) {
  const std::size_t n = a.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double lag = 0.0;
    for (std::size_t j = 0; j < n; ++j) lag += m(i, j) * b[j];
    out[i] = a[i] * lag;
  }
  return out;
}

// out[i] = scale * sum_j m(i, j) (a[i] - a[j])^2
template <class M>
std::vector<double> squared_differences(const M& m, const std::vector<double>& a,
                                        double scale) {
  const std::size_t n = a.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double diff = a[i] - a[j];
      sum += m(i, j) * diff * diff;
    }
    out[i] = scale * sum;
  }
  return out;
}

double ratio_gap(double num, double den, double ratio, double floor) {
  if (std::abs(den) >= floor) {
    return std::abs(num / den - ratio) / std::abs(ratio);
  }
  const double expected = ratio * den;
  const double scale = std::max({std::abs(num), std::abs(expected)});
  return scale == 0.0 ? 0.0 : std::abs(num - expected) / scale;
}

}  // namespace

std::vector<double> mi1(const ContiguityMatrix& v, const TransformSet& t) {
  detail::require_same_size(v.size(), t.size(), "mi1");
  return cross_product(v, t.y, t.y);
}

std::vector<double> mi2(const RowWeights& wr, const TransformSet& t) {
  detail::require_same_size(wr.size(), t.size(), "mi2");
  return cross_product(wr, t.z, t.z);
}

std::vector<double> mi3(const GlobalWeights& wg, const TransformSet& t) {
  detail::require_same_size(wg.size(), t.size(), "mi3");
  return cross_product(wg, t.z, t.z);
}

std::vector<double> gc1(const ContiguityMatrix& v, const TransformSet& t) {
  detail::require_same_size(v.size(), t.size(), "gc1");
  return squared_differences(v, t.y, 1.0);
}

std::vector<double> gc2(const RowWeights& wr, const TransformSet& t) {
  detail::require_same_size(wr.size(), t.size(), "gc2");
  return squared_differences(wr, t.y, 1.0 / t.sigma2);
}

std::vector<double> gc3(const GlobalWeights& wg, const TransformSet& t) {
  detail::require_same_size(wg.size(), t.size(), "gc3");
  return squared_differences(wg, t.zs, 0.5);
}

std::vector<double> gc3_from_mi3(const GlobalWeights& wg, const TransformSet& t,
                                 const std::vector<double>& local_moran) {
  detail::require_same_size(wg.size(), t.size(), "gc3_from_mi3");
  detail::require_same_size(wg.size(), local_moran.size(), "gc3_from_mi3");
  const std::size_t n = t.size();
  const double factor =
      (static_cast<double>(n) - 1.0) / (2.0 * static_cast<double>(n));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double zi2 = t.z[i] * t.z[i];
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += wg(i, j) * (zi2 + t.z[j] * t.z[j]);
    out[i] = factor * (sum - 2.0 * local_moran[i]);
  }
  return out;
}

std::vector<double> gc3_population_form(const GlobalWeights& wg,
                                        const TransformSet& t) {
  detail::require_same_size(wg.size(), t.size(), "gc3_population_form");
  const double n = static_cast<double>(t.size());
  return squared_differences(wg, t.z, (n - 1.0) / (2.0 * n));
}

Ratios ratios(const LisaTable& lt, const TransformSet& t,
              const ContiguityMatrix& v) {
  const std::size_t n = t.size();
  detail::require_same_size(v.size(), n, "ratios");
  for (const auto* col : {&lt.mi1, &lt.mi2, &lt.mi3, &lt.gc1, &lt.gc2, &lt.gc3}) {
    detail::require_same_size(col->size(), n, "ratios");
  }

  Ratios r;
  r.ratio13 = t.sigma2 * v.total();
  r.gratio13 = 2.0 * t.s2 * v.total();
  r.ratio12.resize(n);
  const double floor = kRatioDenominatorFloor * r.ratio13;
  for (std::size_t i = 0; i < n; ++i) {
    r.ratio12[i] = t.sigma2 * v.row_sums()[i];
    r.max_relative_gap = std::max({
        r.max_relative_gap,
        ratio_gap(lt.mi1[i], lt.mi2[i], r.ratio12[i], floor),
        ratio_gap(lt.gc1[i], lt.gc2[i], r.ratio12[i], floor),
        ratio_gap(lt.mi1[i], lt.mi3[i], r.ratio13, floor),
        ratio_gap(lt.gc1[i], lt.gc3[i], r.gratio13, floor),
    });
  }
  return r;
}

LisaTable compute_lisa_table(const ContiguityMatrix& v, const GlobalWeights& wg,
                             const RowWeights& wr, const TransformSet& t) {
  LisaTable lt;
  lt.labels = v.labels();
  lt.mi1 = mi1(v, t);
  lt.mi2 = mi2(wr, t);
  lt.mi3 = mi3(wg, t);
  lt.gc1 = gc1(v, t);
  lt.gc2 = gc2(wr, t);
  lt.gc3 = gc3(wg, t);
  auto r = ratios(lt, t, v);
  lt.ratio12 = std::move(r.ratio12);
  lt.ratio13 = r.ratio13;
  lt.gratio13 = r.gratio13;
  return lt;
}

}  // namespace lisakit
