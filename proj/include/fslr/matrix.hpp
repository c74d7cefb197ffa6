#pragma once

#include "fslr/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

namespace fslr {

/// Dense square-or-rectangular matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Rows `row_set` and columns `col_set`, in the order given.
  PolyMatrix submatrix(std::span<const int> row_set, std::span<const int> col_set) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  /// Row-major list of rows, each a list of polynomial JSON values.
  nlohmann::json to_json() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Laplace expansion along the first row, memoised over column subsets.
Polynomial det_cofactor(const PolyMatrix& m);
/// Fraction-free Bareiss elimination; every division is exact.
Polynomial det_bareiss(const PolyMatrix& m);
/// Cofactor expansion for n <= 6, Bareiss above.
Polynomial det(const PolyMatrix& m);

}  // namespace fslr
