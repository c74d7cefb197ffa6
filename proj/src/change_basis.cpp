#include "fslr/change_basis.hpp"

#include "fslr/lr_rule.hpp"

#include <algorithm>
#include <stdexcept>

namespace fslr {

Partition complement(const Partition& lambda, int n, int m) {
  if (!lambda.fits(n)) {
    throw std::invalid_argument("partition " + lambda.to_string() + " has more than n = " + std::to_string(n) +
                                " parts");
  }
  if (m < lambda.width()) {
    throw std::invalid_argument("complement needs m >= " + std::to_string(lambda.width()) + " (the number of " +
                                "columns of " + lambda.to_string() + "), got m = " + std::to_string(m));
  }
  const Partition conj = lambda.conjugate();
  std::vector<int> parts(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) parts[static_cast<std::size_t>(i - 1)] = n - conj[m + 1 - i];
  return Partition(std::move(parts));
}

IndexSet::IndexSet(std::vector<int> elements, int universe) : elements_(std::move(elements)), universe_(universe) {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] < 0 || elements_[k] >= universe_ || (k > 0 && elements_[k - 1] >= elements_[k])) {
      throw std::invalid_argument("index set must be strictly increasing inside 0..N-1");
    }
  }
}

IndexSet IndexSet::complement() const {
  std::vector<int> out;
  auto it = elements_.begin();
  for (int v = 0; v < universe_; ++v) {
    if (it != elements_.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  return IndexSet(std::move(out), universe_);
}

int IndexSet::inversion_count() const {
  int count = 0;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    // Elements below elements_[k] that are outside the set.
    count += elements_[k] - static_cast<int>(k);
  }
  return count;
}

int IndexSet::shifted_rank() const {
  int total = 0;
  for (std::size_t k = 0; k < elements_.size(); ++k) total += elements_[k] - static_cast<int>(k + 1);
  return total;
}

IndexSet partition_to_index_set(const Partition& nu, int n, int m) {
  if (!nu.fits(n)) throw std::invalid_argument("partition " + nu.to_string() + " has more than n parts");
  if (nu.width() > m) {
    throw std::invalid_argument("partition " + nu.to_string() + " has more than m = " + std::to_string(m) +
                                " columns");
  }
  std::vector<int> elements;
  for (int i = n; i >= 1; --i) elements.push_back(nu[i] + n - i);
  return IndexSet(std::move(elements), n + m);
}

Partition index_set_to_partition(const IndexSet& set) {
  const auto& e = set.elements();
  const int n = static_cast<int>(e.size());
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) parts[static_cast<std::size_t>(k - 1)] = e[static_cast<std::size_t>(n - k)] - (n - k);
  return Partition(std::move(parts));
}

namespace {

void require_fits(const Partition& p, int n) {
  if (!p.fits(n)) {
    throw std::invalid_argument("partition " + p.to_string() + " has more than n = " + std::to_string(n) + " parts");
  }
}

}  // namespace

Polynomial c_coeff_det(const Partition& lambda, const Partition& mu, int n, int family) {
  require_fits(lambda, n);
  require_fits(mu, n);
  PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      m(i - 1, j - 1) = elementary_sym(lambda[i] - mu[j] - i + j, lambda[i] + n - i, family, false);
    }
  }
  return det(m);
}

Polynomial d_coeff_det(const Partition& lambda, const Partition& mu, int n, int family) {
  require_fits(lambda, n);
  require_fits(mu, n);
  PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      m(i - 1, j - 1) = complete_sym(lambda[i] - mu[j] - i + j, mu[j] + n + 1 - j, family, true);
    }
  }
  return det(m);
}

namespace {

int admissible_m(const Partition& lambda, const Partition& mu, std::optional<int> m) {
  const int minimal = std::max(lambda.width(), mu.width());
  if (!m) return minimal;
  if (*m < minimal) {
    throw std::invalid_argument("m = " + std::to_string(*m) + " is below the minimal admissible value " +
                                std::to_string(minimal));
  }
  return *m;
}

}  // namespace

Polynomial d_coeff_dual(const Partition& lambda, const Partition& mu, int n, std::optional<int> m, int family) {
  require_fits(lambda, n);
  require_fits(mu, n);
  const int width = admissible_m(lambda, mu, m);
  return c_coeff_det(complement(mu, n, width), complement(lambda, n, width), width, family).negate_family(family);
}

Polynomial c_coeff_dual(const Partition& lambda, const Partition& mu, int n, std::optional<int> m, int family) {
  require_fits(lambda, n);
  require_fits(mu, n);
  const int width = admissible_m(lambda, mu, m);
  return d_coeff_det(complement(mu, n, width), complement(lambda, n, width), width, family).negate_family(family);
}

std::pair<PolyMatrix, PolyMatrix> matrix_AB(int N, int family) {
  if (N < 1) throw std::invalid_argument("matrix_AB needs N >= 1");
  PolyMatrix a(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  PolyMatrix b(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      a(i, j) = elementary_sym(i - j, i, family, false);
      b(i, j) = complete_sym(i - j, j + 1, family, true);
    }
  }
  return {std::move(a), std::move(b)};
}

std::vector<int> index_rows(const Partition& nu, int n) {
  require_fits(nu, n);
  std::vector<int> rows;
  for (int i = 1; i <= n; ++i) rows.push_back(nu[i] + n - i);
  return rows;
}

std::vector<Partition> basis_candidates(const Partition& lambda, int n) {
  return partitions_in_box(n, lambda.width(), lambda.size());
}

CoeffTable expand_factorial_in_schur(const Partition& lambda, int n, int family) {
  require_fits(lambda, n);
  CoeffTable table(MultiShape{lambda}, n);
  table.set_basis("schur");
  for (const auto& mu : basis_candidates(lambda, n)) table.set(mu, c_coeff_det(lambda, mu, n, family));
  return table;
}

CoeffTable expand_schur_in_factorial(const Partition& lambda, int n, int family) {
  require_fits(lambda, n);
  CoeffTable table(MultiShape{lambda}, n);
  table.set_basis("factorial");
  for (const auto& mu : basis_candidates(lambda, n)) table.set(mu, d_coeff_det(lambda, mu, n, family));
  return table;
}

CoeffTable change_basis(const Partition& lambda, int n, BasisDirection direction, BasisMethod method,
                        std::optional<int> m, int family) {
  require_fits(lambda, n);
  if (m && *m < lambda.width()) {
    throw std::invalid_argument("m = " + std::to_string(*m) + " is below lambda_1 = " + std::to_string(lambda.width()));
  }
  const bool to_schur = direction == BasisDirection::FactorialToSchur;
  CoeffTable table(MultiShape{lambda}, n);
  table.set_basis(to_schur ? "schur" : "factorial");
  for (const auto& mu : basis_candidates(lambda, n)) {
    Polynomial value;
    switch (method) {
      case BasisMethod::Determinant:
        value = to_schur ? c_coeff_det(lambda, mu, n, family) : d_coeff_det(lambda, mu, n, family);
        break;
      case BasisMethod::Dual:
        value = to_schur ? c_coeff_dual(lambda, mu, n, m, family) : d_coeff_dual(lambda, mu, n, m, family);
        break;
      case BasisMethod::Tableau:
        if (to_schur) {
          value = lr_coefficient(MultiShape{lambda}, mu, n).rename_family(1, family);
        } else {
          // The rule needs an alphabet of at least one letter; any admissible m gives the same value.
          const int width = std::max(1, admissible_m(lambda, mu, m));
          value = lr_coefficient(MultiShape{complement(mu, n, width)}, complement(lambda, n, width), width)
                      .negate_family(1)
                      .rename_family(1, family);
        }
        break;
    }
    table.set(mu, std::move(value));
  }
  return table;
}

CoeffTable expand_in_factorial(const MultiShape& shape, int n, int target_family) {
  if (target_family < 1 || target_family > std::max(1, shape.count())) {
    throw std::invalid_argument("target family out of range");
  }
  CoeffTable out(shape, n);
  out.set_basis("factorial");
  std::map<Partition, PolynomialAccumulator, PartitionDescending> acc;
  const CoeffTable lr = lr_expand(shape, n);
  for (const auto& [nu, c] : lr.entries()) {
    for (const auto& mu : basis_candidates(nu, n)) {
      Polynomial d = d_coeff_det(nu, mu, n, target_family);
      if (!d.is_zero()) acc[mu].add(c * d);
    }
  }
  for (auto& [mu, a] : acc) out.set(mu, std::move(a).finish());
  return out;
}

Polynomial e_coefficient(const MultiShape& shape, const Partition& mu, int n, int target_family) {
  if (target_family < 1 || target_family > std::max(1, shape.count())) {
    throw std::invalid_argument("target family out of range");
  }
  if (!mu.fits(n)) return {};
  PolynomialAccumulator acc;
  const CoeffTable lr = lr_expand(shape, n);
  for (const auto& [nu, c] : lr.entries()) {
    if (!nu.contains(mu)) continue;
    acc.add(c * d_coeff_det(nu, mu, n, target_family));
  }
  return std::move(acc).finish();
}

Polynomial compose_via_classical(const MultiShape& shape, const Partition& mu, int n) {
  if (shape.count() != 2) {
    throw std::invalid_argument("compose_via_classical needs a shape of exactly two diagrams");
  }
  const Partition& first = shape.diagram(1);
  const Partition& second = shape.diagram(2);
  require_fits(first, n);
  require_fits(second, n);
  if (!mu.fits(n)) return {};
  PolynomialAccumulator acc;
  for (const auto& alpha : basis_candidates(first, n)) {
    Polynomial ca;
    for (const auto& beta : basis_candidates(second, n)) {
      if (alpha.size() + beta.size() != mu.size()) continue;
      const long classical = classical_lr(alpha, beta, mu, n);
      if (classical == 0) continue;
      if (ca.is_zero()) ca = c_coeff_det(first, alpha, n, 1);
      if (ca.is_zero()) break;
      acc.add(Integer(classical) * (ca * c_coeff_det(second, beta, n, 2)));
    }
  }
  return std::move(acc).finish();
}

}  // namespace fslr
