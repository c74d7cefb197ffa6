#pragma once

// Transition coefficients between the Schur basis {s_mu(x)} and the
// factorial Schur basis {s_mu(x | y)} of the symmetric polynomials in
// x_1..x_n over Z[y], via determinants of elementary and complete
// symmetric polynomials in initial segments of y.

#include "fslr/coeff_table.hpp"
#include "fslr/matrix.hpp"
#include "fslr/partition.hpp"
#include "fslr/polynomial.hpp"
#include "fslr/tableau.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fslr {

/// lambda^c_i = n - lambda'_{m+1-i}: the complement of lambda in the
/// n-row, m-column rectangle, rotated.  Needs lambda_1 <= m and at most n parts.
Partition complement(const Partition& lambda, int n, int m);

/// Strictly increasing n-subset of {0, ..., N-1}.
class IndexSet {
 public:
  IndexSet(std::vector<int> elements, int universe);

  const std::vector<int>& elements() const { return elements_; }
  int universe() const { return universe_; }
  /// {0..N-1} minus this set.
  IndexSet complement() const;
  /// #{(j, i) : j < i, i in I, j not in I}.
  int inversion_count() const;
  /// sum_k (i_k - k) over the increasing listing i_1 < ... < i_n, k 1-based.
  int shifted_rank() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> elements_;
  int universe_;
};

/// I_nu = {nu_i + n - i}, inside {0..n+m-1}.  Needs nu_1 <= m.
IndexSet partition_to_index_set(const Partition& nu, int n, int m);
/// Inverse of partition_to_index_set for an n-subset of {0..N-1}.
Partition index_set_to_partition(const IndexSet& set);

/// det( e_{lambda_i - mu_j - i + j}( y_1..y_{lambda_i + n - i} ) ).
Polynomial c_coeff_det(const Partition& lambda, const Partition& mu, int n, int family = 1);
/// det( h_{lambda_i - mu_j - i + j}( -y_1..-y_{mu_i + n + 1 - i} ) ).
Polynomial d_coeff_det(const Partition& lambda, const Partition& mu, int n, int family = 1);
/// c_coeff_det(mu^c, lambda^c, m) with y -> -y.  m defaults to
/// max(lambda_1, mu_1); throws std::invalid_argument when m is smaller.
Polynomial d_coeff_dual(const Partition& lambda, const Partition& mu, int n, std::optional<int> m = std::nullopt,
                        int family = 1);
/// c via the same duality read backwards: d_coeff_det(mu^c, lambda^c, m) with y -> -y.
Polynomial c_coeff_dual(const Partition& lambda, const Partition& mu, int n, std::optional<int> m = std::nullopt,
                        int family = 1);

/// A = (e_{i-j}(y_(i))), B = (h_{i-j}((-y)_(j+1))), 0 <= i, j <= N-1.
std::pair<PolyMatrix, PolyMatrix> matrix_AB(int N, int family = 1);

/// Row/column listing of I_nu used to cut minors out of matrix_AB.
std::vector<int> index_rows(const Partition& nu, int n);

/// Partitions mu with at most n parts, mu_1 <= lambda_1, |mu| <= |lambda|.
std::vector<Partition> basis_candidates(const Partition& lambda, int n);

/// mu -> c_{lambda,n}^mu(y): s_lambda(x | y) in the Schur basis.
CoeffTable expand_factorial_in_schur(const Partition& lambda, int n, int family = 1);
/// mu -> d_{lambda,n}^mu(y): s_lambda(x) in the factorial Schur basis.
CoeffTable expand_schur_in_factorial(const Partition& lambda, int n, int family = 1);

enum class BasisDirection { SchurToFactorial, FactorialToSchur };
enum class BasisMethod {
  Determinant,  // c_coeff_det / d_coeff_det
  Dual,         // c_coeff_dual / d_coeff_dual
  Tableau,      // barred-tableau rule; for d through d = c^{lambda^c}_{mu^c,m}(-y)
};

/// The full table of one change of basis by the chosen method.  `m` only
/// matters for Dual and Tableau; it defaults per entry to the smallest
/// admissible value and must be at least lambda_1 when given.
CoeffTable change_basis(const Partition& lambda, int n, BasisDirection direction, BasisMethod method,
                        std::optional<int> m = std::nullopt, int family = 1);

/// Coefficient of s_mu(x | y^(target_family)) in s_shape(x | y).
Polynomial e_coefficient(const MultiShape& shape, const Partition& mu, int n, int target_family);
/// Every nonzero e_coefficient.
CoeffTable expand_in_factorial(const MultiShape& shape, int n, int target_family);

/// For two-diagram shapes: sum over alpha, beta of
/// c_{l1,n}^alpha(y^(1)) c_{l2,n}^beta(y^(2)) c^mu_{alpha,beta}.
Polynomial compose_via_classical(const MultiShape& shape, const Partition& mu, int n);

}  // namespace fslr
