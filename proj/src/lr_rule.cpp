#include "fslr/lr_rule.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fslr {

std::vector<int> rho(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] = n - 1 - k;
  return r;
}

namespace {

void require_fits(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!lambda.fits(n)) {
    throw std::invalid_argument("partition " + lambda.to_string() + " has more than n = " + std::to_string(n) +
                                " parts");
  }
}

}  // namespace

Polynomial schur(const Partition& lambda, int n) {
  require_fits(lambda, n);
  std::map<std::vector<int>, long> contents;
  enumerate_semistandard(lambda, n, [&](const BarredSkewTableau& t) { ++contents[unbarred_content(t)]; });
  std::vector<Term> terms;
  for (const auto& [e, count] : contents) terms.push_back({Monomial::x_power(e), Integer(count)});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial factorial_schur(const Partition& lambda, int n, int family) {
  require_fits(lambda, n);
  PolynomialAccumulator acc;
  enumerate_semistandard(lambda, n, [&](const BarredSkewTableau& t) {
    Polynomial product(1);
    const auto cells = t.cells();
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const int a = t.entries()[k].value;
      const Cell& c = cells[k];
      product *= Polynomial::variable(VarId::x(a)) +
                 Polynomial::variable(VarId::y(family, a + c.col - c.row));
    }
    acc.add(product);
  });
  return std::move(acc).finish();
}

const Polynomial& FactorialSchurCache::get(const Partition& lambda, int n, int family) {
  auto key = std::make_tuple(lambda, n, family);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Polynomial value = factorial_schur(lambda, n, family);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

Polynomial product_factorial_schur(const MultiShape& shape, int n, FactorialSchurCache* cache) {
  Polynomial product(1);
  for (int i = 1; i <= shape.count(); ++i) {
    if (cache) {
      product *= cache->get(shape.diagram(i), n, i);
    } else {
      product *= factorial_schur(shape.diagram(i), n, i);
    }
  }
  return product;
}

void enumerate_yamanouchi(const MultiShape& shape, int n, const std::optional<Partition>& mu, BarPolicy bars,
                          const TableauVisitor& visit) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!shape.fits(n)) {
    throw std::invalid_argument("shape " + shape.to_string() + " has a diagram with more than n = " +
                                std::to_string(n) + " rows");
  }
  const int boxes = shape.total_boxes();
  std::vector<int> target;
  if (mu) {
    if (!mu->fits(n) || mu->size() > boxes) return;
    if (bars == BarPolicy::None && mu->size() != boxes) return;
    target = mu->padded(n);
  }
  auto layout = std::make_shared<const CellLayout>(shape, n, 1, shape.total_columns());

  // Column-word order: global columns right to left, each top to bottom.
  std::vector<std::size_t> order;
  for (int col = shape.total_columns(); col >= 1; --col) {
    const auto& column = layout->column(col);
    order.insert(order.end(), column.begin(), column.end());
  }
  struct Links {
    std::optional<std::size_t> above;
    std::optional<std::size_t> right;
    int cap;  // largest value leaving room for the rows below
  };
  std::vector<Links> links(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Cell& c = layout->cells()[order[k]];
    const int depth = shape.diagram(c.diagram).conjugate()[c.col];
    links[k] = {layout->index_of({c.diagram, c.row - 1, c.col}), layout->index_of({c.diagram, c.row, c.col + 1}),
                n - (depth - c.row)};
  }

  std::vector<BarredEntry> entries(order.size());
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);  // counts[v], v = 1..n
  int missing = mu ? mu->size() : 0;                            // unbarred entries still owed to mu

  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == order.size()) {
      if (!mu || missing == 0) visit(BarredSkewTableau::trusted(layout, entries));
      return;
    }
    const Links& lk = links[k];
    int low = 1;
    int high = lk.cap;
    if (lk.above) low = entries[*lk.above].value + 1;
    if (lk.right) high = std::min(high, entries[*lk.right].value);
    const auto remaining_after = static_cast<int>(order.size() - k - 1);
    const std::size_t cell = order[k];
    for (int v = low; v <= high; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      const bool yamanouchi_ok = v == 1 || counts[vi] + 1 <= counts[vi - 1];
      const bool content_ok = !mu || counts[vi] + 1 <= target[vi - 1];
      if (yamanouchi_ok && content_ok && (!mu || remaining_after >= missing - 1)) {
        entries[cell] = {v, false};
        ++counts[vi];
        if (mu) --missing;
        fill(k + 1);
        --counts[vi];
        if (mu) ++missing;
      }
      if (bars == BarPolicy::Any && (!mu || remaining_after >= missing)) {
        entries[cell] = {v, true};
        fill(k + 1);
      }
    }
  };
  fill(0);
}

void enumerate_lr_tableaux(const MultiShape& shape, const Partition& mu, int n, const TableauVisitor& visit) {
  enumerate_yamanouchi(shape, n, mu, BarPolicy::Any, visit);
}

std::vector<BarredSkewTableau> enumerate_lr_tableaux(const MultiShape& shape, const Partition& mu, int n) {
  std::vector<BarredSkewTableau> out;
  enumerate_lr_tableaux(shape, mu, n, [&](const BarredSkewTableau& t) { out.push_back(t); });
  return out;
}

Polynomial lr_coefficient(const MultiShape& shape, const Partition& mu, int n) {
  PolynomialAccumulator acc;
  enumerate_lr_tableaux(shape, mu, n, [&](const BarredSkewTableau& t) { acc.add(weight_monomial(t), 1); });
  return std::move(acc).finish();
}

CoeffTable lr_expand(const MultiShape& shape, int n) {
  std::map<ContentVector, PolynomialAccumulator> grouped;
  enumerate_yamanouchi(shape, n, std::nullopt, BarPolicy::Any, [&](const BarredSkewTableau& t) {
    grouped[unbarred_content(t)].add(weight_monomial(t), 1);
  });
  CoeffTable table(shape, n);
  for (auto& [content, acc] : grouped) table.set(Partition(content), std::move(acc).finish());
  return table;
}

namespace {

Polynomial alternant_times_product(const MultiShape& shape, int n, FactorialSchurCache* cache) {
  const auto r = rho(n);
  return alternant(r, n) * product_factorial_schur(shape, n, cache);
}

}  // namespace

Polynomial oracle_coefficient(const MultiShape& shape, const Partition& mu, int n, FactorialSchurCache* cache) {
  if (!mu.fits(n)) return {};
  std::vector<int> exponent = mu.padded(n);
  const auto r = rho(n);
  for (int k = 0; k < n; ++k) exponent[static_cast<std::size_t>(k)] += r[static_cast<std::size_t>(k)];
  return coefficient_of_x(alternant_times_product(shape, n, cache), exponent);
}

CoeffTable oracle_expand(const MultiShape& shape, int n, FactorialSchurCache* cache) {
  CoeffTable table(shape, n);
  const auto r = rho(n);
  for (auto& [e, coeff] : split_by_x(alternant_times_product(shape, n, cache), n)) {
    bool strictly_decreasing = true;
    for (int k = 0; k + 1 < n; ++k) strictly_decreasing &= e[k] > e[k + 1];
    if (!strictly_decreasing) continue;
    std::vector<int> mu(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) mu[k] = e[k] - r[k];
    table.set(Partition(std::move(mu)), coeff);
  }
  return table;
}

long classical_lr(const Partition& alpha, const Partition& beta, const Partition& mu, int n) {
  long count = 0;
  enumerate_yamanouchi(MultiShape{alpha, beta}, n, mu, BarPolicy::None,
                       [&](const BarredSkewTableau&) { ++count; });
  return count;
}

}  // namespace fslr
