#include "fslr/matrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace fslr {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial(1);
  return m;
}

PolyMatrix PolyMatrix::submatrix(std::span<const int> row_set, std::span<const int> col_set) const {
  PolyMatrix out(row_set.size(), col_set.size());
  for (std::size_t i = 0; i < row_set.size(); ++i) {
    for (std::size_t j = 0; j < col_set.size(); ++j) {
      auto r = static_cast<std::size_t>(row_set[i]);
      auto c = static_cast<std::size_t>(col_set[j]);
      if (r >= rows_ || c >= cols_) throw std::out_of_range("submatrix index out of range");
      out(i, j) = (*this)(r, c);
    }
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      PolynomialAccumulator acc;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Polynomial& x = a(i, k);
        const Polynomial& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        for (const auto& t : y.terms()) acc.add_shifted(x, t.monomial, t.coeff);
      }
      out(i, j) = std::move(acc).finish();
    }
  }
  return out;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) row.push_back((*this)(i, j).to_json());
    out.push_back(std::move(row));
  }
  return out;
}

Polynomial det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Polynomial(1);
  if (n > 20) throw std::invalid_argument("cofactor expansion limited to n <= 20");
  // minors[mask] = det of the last popcount(mask) rows restricted to the
  // columns in mask.  Built up from the bottom row.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Polynomial> minors(full + 1);
  minors[0] = Polynomial(1);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t row = n - size;
    PolynomialAccumulator acc;
    int position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const Polynomial& entry = m(row, j);
      const Polynomial& minor = minors[mask & ~(std::size_t{1} << j)];
      if (!entry.is_zero() && !minor.is_zero()) {
        const Integer sign = (position % 2 == 0) ? 1 : -1;
        for (const auto& t : minor.terms()) acc.add_shifted(entry, t.monomial, t.coeff * sign);
      }
      ++position;
    }
    minors[mask] = std::move(acc).finish();
  }
  return minors[full];
}

Polynomial det_bareiss(const PolyMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Polynomial(1);
  PolyMatrix a = input;
  Polynomial previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = num.divide_exact(previous);
        if (!q) throw std::logic_error("Bareiss step produced an inexact division");
        a(i, j) = std::move(*q);
      }
      a(i, k) = Polynomial();
    }
    previous = a(k, k);
  }
  Polynomial d = a(n - 1, n - 1);
  return negate ? -d : d;
}

Polynomial det(const PolyMatrix& m) { return m.rows() <= 6 ? det_cofactor(m) : det_bareiss(m); }

}  // namespace fslr
