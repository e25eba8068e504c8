#include "lisakit/square_matrix.hpp"

#include <numeric>
#include <string>

#include "lisakit/error.hpp"

namespace lisakit {

SquareMatrix SquareMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

double SquareMatrix::total() const noexcept {
  return std::accumulate(data_.begin(), data_.end(), 0.0);
}

std::vector<double> SquareMatrix::row_sums() const {
  std::vector<double> sums(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    sums[i] = std::accumulate(r.begin(), r.end(), 0.0);
  }
  return sums;
}

std::vector<std::vector<double>> SquareMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    auto r = row(i);
    rows[i].assign(r.begin(), r.end());
  }
  return rows;
}

}  // namespace lisakit
