#include "fslr/change_basis.hpp"

#include "fslr/lr_rule.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fslr;

namespace {

Polynomial y(int f, int j) { return Polynomial::variable(VarId::y(f, j)); }

}  // namespace

TEST_CASE("complementary partitions") {
  CHECK(complement(Partition{5, 3, 1}, 4, 8) == Partition{4, 4, 4, 3, 3, 2, 2, 1});
  CHECK(complement(Partition{}, 3, 2) == Partition{3, 3});
  CHECK(complement(Partition{}, 3, 0) == Partition{});
  CHECK_THROWS_AS(complement(Partition{5, 3, 1}, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(complement(Partition{1, 1, 1}, 2, 4), std::invalid_argument);
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto all = partitions_in_box(n, m, n * m);
    const Partition& lambda = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const Partition c = complement(lambda, n, m);
    CHECK(lambda.size() + c.size() == n * m);
    CHECK(complement(c, m, n) == lambda);
  }
}

TEST_CASE("index sets") {
  CHECK(partition_to_index_set(Partition{}, 2, 2).elements() == std::vector<int>{0, 1});
  CHECK(partition_to_index_set(Partition{2, 1}, 2, 2).elements() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(partition_to_index_set(Partition{3}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet({1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet({0, 3}, 3), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (const auto& nu : partitions_in_box(n, m, n * m)) {
        const IndexSet set = partition_to_index_set(nu, n, m);
        // Counting definition: pairs j < i with i in I and j outside I.
        int pairs = 0;
        for (int i : set.elements()) {
          for (int j = 0; j < i; ++j) pairs += std::count(set.elements().begin(), set.elements().end(), j) == 0;
        }
        CHECK(set.inversion_count() == pairs);
        CHECK(pairs == nu.size());
        CHECK(set.shifted_rank() == nu.size() - n);
        CHECK(set.complement() == partition_to_index_set(complement(nu, n, m), m, n));
        CHECK(index_set_to_partition(set) == nu);
      }
    }
  }
}

TEST_CASE("c coefficients by determinant") {
  CHECK(c_coeff_det(Partition{1}, Partition{}, 1) == y(1, 1));
  CHECK(c_coeff_det(Partition{1}, Partition{}, 2) == y(1, 1) + y(1, 2));
  CHECK(c_coeff_det(Partition{1}, Partition{}, 2, 3) == y(3, 1) + y(3, 2));
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions_in_box(n, 4, 4)) {
      CHECK(c_coeff_det(lambda, lambda, n) == 1);
      for (const auto& mu : partitions_in_box(n, 4, 4)) {
        CHECK(c_coeff_det(lambda, mu, n) == lr_coefficient(MultiShape{lambda}, mu, n));
      }
    }
  }
}

TEST_CASE("d coefficients by determinant equal the inverse of the c matrix") {
  CHECK(d_coeff_det(Partition{1}, Partition{}, 1) == -y(1, 1));
  for (int n = 1; n <= 3; ++n) {
    const auto parts = oracle::small_partitions(n, 4);
    const std::size_t k = parts.size();
    // Solve sum_nu c(lambda, nu) d(nu, mu) = delta by back substitution on size.
    std::vector<std::vector<Polynomial>> inv(k, std::vector<Polynomial>(k));
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return parts[a].size() < parts[b].size(); });
    for (std::size_t a : order) {
      for (std::size_t b = 0; b < k; ++b) {
        Polynomial v(a == b ? 1 : 0);
        for (std::size_t l = 0; l < k; ++l) {
          if (parts[l].size() < parts[a].size()) v -= c_coeff_det(parts[a], parts[l], n) * inv[l][b];
        }
        inv[a][b] = v;
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        CHECK_MESSAGE(d_coeff_det(parts[a], parts[b], n) == inv[a][b],
                      "lambda=" << parts[a].to_string() << " mu=" << parts[b].to_string() << " n=" << n);
      }
    }
  }
}

TEST_CASE("duality through complementary partitions") {
  CHECK(d_coeff_dual(Partition{2, 1}, Partition{2, 1}, 2) == 1);
  CHECK_THROWS_AS(d_coeff_dual(Partition{2, 1}, Partition{1}, 2, 1), std::invalid_argument);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions_in_box(n, 4, 4)) {
      for (const auto& mu : partitions_in_box(n, 4, 4)) {
        const int m = std::max(lambda.width(), mu.width());
        const Polynomial d = d_coeff_det(lambda, mu, n);
        CHECK(d_coeff_dual(lambda, mu, n) == d);
        CHECK(d_coeff_dual(lambda, mu, n, m + 1) == d);
        CHECK(d_coeff_dual(lambda, mu, n, m + 2) == d);
        CHECK(c_coeff_dual(lambda, mu, n, m + 1) == c_coeff_det(lambda, mu, n));
      }
    }
  }
}

TEST_CASE("A and B are inverse matrices") {
  const auto [a1, b1] = matrix_AB(1);
  CHECK(a1 == PolyMatrix::identity(1));
  CHECK(b1 == PolyMatrix::identity(1));
  for (int big_n = 1; big_n <= 6; ++big_n) {
    const auto [a, b] = matrix_AB(big_n);
    CHECK(a * b == PolyMatrix::identity(static_cast<std::size_t>(big_n)));
    CHECK(b * a == PolyMatrix::identity(static_cast<std::size_t>(big_n)));
  }
  const auto [a, b] = matrix_AB(3);
  CHECK(a(2, 0) == y(1, 1) * y(1, 2));
  CHECK(b(2, 0) == y(1, 1).pow(2));
  CHECK(b(2, 1) == -y(1, 1) - y(1, 2));
  CHECK_THROWS_AS(matrix_AB(0), std::invalid_argument);
}

TEST_CASE("c coefficients are minors of A") {
  for (int n = 1; n <= 3; ++n) {
    const auto [a, b] = matrix_AB(n + 4);
    for (const auto& lambda : partitions_in_box(n, 4, 4)) {
      for (const auto& mu : partitions_in_box(n, 4, 4)) {
        const auto rows = index_rows(lambda, n);
        const auto cols = index_rows(mu, n);
        CHECK(det(a.submatrix(rows, cols)) == c_coeff_det(lambda, mu, n));
        CHECK(det(b.submatrix(rows, cols)) == d_coeff_det(lambda, mu, n));
      }
    }
  }
}

TEST_CASE("change-of-basis tables") {
  const CoeffTable empty = expand_schur_in_factorial(Partition{}, 2);
  CHECK(empty.size() == 1);
  CHECK(empty.at(Partition{}) == 1);
  const CoeffTable d1 = expand_schur_in_factorial(Partition{1}, 1);
  CHECK(d1.size() == 2);
  CHECK(d1.at(Partition{1}) == 1);
  CHECK(d1.at(Partition{}) == -y(1, 1));
  CHECK(d1.basis() == std::optional<std::string>("factorial"));
  const CoeffTable c1 = expand_factorial_in_schur(Partition{1}, 1);
  CHECK(c1.at(Partition{}) == y(1, 1));
  CHECK(c1.basis() == std::optional<std::string>("schur"));
  CHECK(expand_factorial_in_schur(Partition{}, 3).at(Partition{}) == 1);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions_in_box(n, 4, 4)) {
      CHECK(expand_factorial_in_schur(lambda, n) == lr_expand(MultiShape{lambda}, n));
      Polynomial rebuilt;
      for (const auto& [mu, d] : expand_schur_in_factorial(lambda, n, 2).entries()) {
        rebuilt += d * factorial_schur(mu, n, 2);
      }
      CHECK(rebuilt == schur(lambda, n));
      for (auto dir : {BasisDirection::FactorialToSchur, BasisDirection::SchurToFactorial}) {
        const CoeffTable det_table = change_basis(lambda, n, dir, BasisMethod::Determinant);
        CHECK(change_basis(lambda, n, dir, BasisMethod::Dual) == det_table);
        CHECK(change_basis(lambda, n, dir, BasisMethod::Tableau) == det_table);
        CHECK(change_basis(lambda, n, dir, BasisMethod::Tableau, lambda.width() + 1) == det_table);
      }
    }
  }
  CHECK_THROWS_AS(change_basis(Partition{3}, 2, BasisDirection::SchurToFactorial, BasisMethod::Dual, 2),
                  std::invalid_argument);
}

TEST_CASE("factorial-basis expansion of products") {
  // A factorial Schur function expands to itself.
  CHECK(e_coefficient(MultiShape{{2, 1}}, Partition{2, 1}, 2, 1) == 1);
  CHECK(e_coefficient(MultiShape{{2, 1}}, Partition{2}, 2, 1).is_zero());
  CHECK(e_coefficient(MultiShape{{2, 1}}, Partition{1}, 2, 1).is_zero());
  CHECK_THROWS_AS(e_coefficient(MultiShape{{1}}, Partition{1}, 2, 2), std::invalid_argument);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& shape : multishapes_up_to(2, n, 4)) {
      const Polynomial product = product_factorial_schur(shape, n);
      for (int target = 1; target <= shape.count(); ++target) {
        const CoeffTable e = expand_in_factorial(shape, n, target);
        Polynomial rebuilt;
        for (const auto& [mu, p] : e.entries()) {
          CHECK(e_coefficient(shape, mu, n, target) == p);
          rebuilt += p * factorial_schur(mu, n, target);
        }
        CHECK_MESSAGE(rebuilt == product, shape.to_string() << " n=" << n << " target=" << target);
      }
    }
  }
}

TEST_CASE("composition through classical coefficients") {
  const MultiShape example{{2, 1}, {1, 1}};
  CHECK(compose_via_classical(example, Partition{2, 2}, 2) == y(1, 1) + y(1, 2) + y(1, 3) + y(2, 1));
  CHECK(compose_via_classical(MultiShape{{}, {}}, Partition{}, 2) == 1);
  CHECK(compose_via_classical(MultiShape{{}, {}}, Partition{1}, 2).is_zero());
  CHECK_THROWS_AS(compose_via_classical(MultiShape{{1}}, Partition{1}, 2), std::invalid_argument);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& shape : multishapes_up_to(2, n, 5)) {
      if (shape.count() != 2) continue;
      for (const auto& mu : partitions_in_box(n, 5, 5)) {
        CHECK(compose_via_classical(shape, mu, n) == lr_coefficient(shape, mu, n));
      }
    }
  }
}
