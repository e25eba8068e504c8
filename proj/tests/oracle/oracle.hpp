#pragma once

// Reference implementation written straight from the definitions with plain
// double loops. It shares no code with the library and is only used to
// cross-check it.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<double>>;

struct Result {
  std::size_t n = 0;
  Grid v, w, wr;  // contiguity, global weights, row weights
  double v0 = 0;
  std::vector<double> vi;
  double mean = 0, sigma2 = 0, s2 = 0;
  std::vector<double> y, z, zs;
  double moran = 0, geary = 0;
  std::vector<double> mi1, mi2, mi3, gc1, gc2, gc3;
};

inline Result evaluate(const Grid& d, const std::vector<double>& x,
                       const std::function<double(double)>& kernel) {
  Result r;
  const std::size_t n = x.size();
  r.n = n;
  r.v.assign(n, std::vector<double>(n, 0.0));
  r.vi.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) r.v[i][j] = kernel(d[i][j]);
      r.vi[i] += r.v[i][j];
    }
    r.v0 += r.vi[i];
  }
  r.w = r.v;
  r.wr = r.v;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r.w[i][j] = r.v[i][j] / r.v0;
      r.wr[i][j] = r.v[i][j] / r.vi[i];
    }
  }

  for (double xi : x) r.mean += xi;
  r.mean /= static_cast<double>(n);
  double ss = 0;
  for (double xi : x) ss += (xi - r.mean) * (xi - r.mean);
  r.sigma2 = ss / static_cast<double>(n);
  r.s2 = ss / static_cast<double>(n - 1);
  const double sigma = std::sqrt(r.sigma2);
  const double s = std::sqrt(r.s2);
  for (double xi : x) {
    r.y.push_back(xi - r.mean);
    r.z.push_back((xi - r.mean) / sigma);
    r.zs.push_back((xi - r.mean) / s);
  }

  for (std::size_t i = 0; i < n; ++i) {
    double a1 = 0, a2 = 0, a3 = 0, g1 = 0, g2 = 0, g3 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      a1 += r.v[i][j] * r.y[j];
      a2 += r.wr[i][j] * r.z[j];
      a3 += r.w[i][j] * r.z[j];
      const double dy = r.y[i] - r.y[j];
      const double dzs = r.zs[i] - r.zs[j];
      g1 += r.v[i][j] * dy * dy;
      g2 += r.wr[i][j] * dy * dy;
      g3 += r.w[i][j] * dzs * dzs;
    }
    r.mi1.push_back(r.y[i] * a1);
    r.mi2.push_back(r.z[i] * a2);
    r.mi3.push_back(r.z[i] * a3);
    r.gc1.push_back(g1);
    r.gc2.push_back(g2 / r.sigma2);
    r.gc3.push_back(0.5 * g3);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r.moran += r.w[i][j] * r.z[i] * r.z[j];
      const double dzs = r.zs[i] - r.zs[j];
      r.geary += 0.5 * r.w[i][j] * dzs * dzs;
    }
  }
  return r;
}

inline double inverse_kernel(double d) { return 1.0 / d; }

inline std::function<double(double)> power_kernel(double beta) {
  return [beta](double d) { return std::pow(d, -beta); };
}

}  // namespace oracle
