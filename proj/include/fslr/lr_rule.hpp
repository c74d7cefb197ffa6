#pragma once

// Factorial Schur functions and the barred-tableau Littlewood-Richardson
// rule for expanding their products in the Schur basis.

#include "fslr/coeff_table.hpp"
#include "fslr/partition.hpp"
#include "fslr/polynomial.hpp"
#include "fslr/tableau.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <tuple>

namespace fslr {

/// s_lambda(x_1..x_n), summed over semistandard tableaux.
Polynomial schur(const Partition& lambda, int n);

/// s_lambda(x | y^(family)): sum over semistandard T of
/// prod_a (x_a + y^(family)_{a + c(a) - r(a)}).
Polynomial factorial_schur(const Partition& lambda, int n, int family);

/// Thread-safe memo of factorial_schur keyed by (lambda, n, family).
class FactorialSchurCache {
 public:
  const Polynomial& get(const Partition& lambda, int n, int family);

 private:
  std::mutex mutex_;
  std::map<std::tuple<Partition, int, int>, Polynomial> cache_;
};

/// prod_i s_{lambda^(i)}(x | y^(i)).
Polynomial product_factorial_schur(const MultiShape& shape, int n, FactorialSchurCache* cache = nullptr);

/// Which bars an enumeration admits.
enum class BarPolicy { Any, None };

/// Barred tableaux with Yamanouchi unbarred column word, optionally
/// restricted to unbarred content mu.  Fillings are built in column-word
/// order and cut as soon as the word prefix fails Yamanouchi, a value
/// overshoots mu, or the remaining boxes cannot complete mu.
void enumerate_yamanouchi(const MultiShape& shape, int n, const std::optional<Partition>& mu,
                          BarPolicy bars, const TableauVisitor& visit);

/// LR^mu_shape: unbarred content mu, Yamanouchi column word.
void enumerate_lr_tableaux(const MultiShape& shape, const Partition& mu, int n, const TableauVisitor& visit);
std::vector<BarredSkewTableau> enumerate_lr_tableaux(const MultiShape& shape, const Partition& mu, int n);

/// Sum of weights over LR^mu_shape.  Zero when mu has more than n parts.
Polynomial lr_coefficient(const MultiShape& shape, const Partition& mu, int n);

/// Every nonzero lr_coefficient, from a single pass over Yamanouchi tableaux.
CoeffTable lr_expand(const MultiShape& shape, int n);

/// Coefficient of x^(rho + mu) in a_rho(x) * s_shape(x | y).  No tableau
/// combinatorics on the coefficient side.
Polynomial oracle_coefficient(const MultiShape& shape, const Partition& mu, int n,
                              FactorialSchurCache* cache = nullptr);

/// Every oracle coefficient at once: the x-monomials of a_rho * s_shape
/// with strictly decreasing exponent vectors rho + mu.
CoeffTable oracle_expand(const MultiShape& shape, int n, FactorialSchurCache* cache = nullptr);

/// Classical Littlewood-Richardson coefficient c^mu_{alpha,beta}, counted as
/// bar-free LR tableaux of shape (alpha, beta).
long classical_lr(const Partition& alpha, const Partition& beta, const Partition& mu, int n);

/// (n-1, n-2, ..., 0).
std::vector<int> rho(int n);

}  // namespace fslr
