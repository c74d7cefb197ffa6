#include "fslr/verify.hpp"

#include "fslr/change_basis.hpp"
#include "fslr/involution.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace fslr {

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j = {{"suite", suite}, {"checks", checks}, {"failures", failures}, {"seconds", seconds},
                      {"ok", ok()}};
  j["first_failure"] = first_failure ? nlohmann::json(*first_failure) : nlohmann::json(nullptr);
  return j;
}

std::string SuiteReport::to_plain() const {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f", seconds);
  std::string out = suite + ": " + std::to_string(checks) + " checks, " + std::to_string(failures) + " failures (" +
                    timing + " s)";
  if (first_failure) out += "\n  first failure: " + *first_failure;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"involutions", "cancellation", "lemma3",
                                                 "theorem",     "basis",        "remark"};
  return names;
}

namespace {

class Checker {
 public:
  explicit Checker(SuiteReport& report) : report_(report) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++report_.checks;
    if (ok) return;
    ++report_.failures;
    if (!report_.first_failure) report_.first_failure = describe();
  }

 private:
  SuiteReport& report_;
};

std::string where(const MultiShape& shape, int n) { return "shape " + shape.to_string() + ", n = " + std::to_string(n); }

std::string where(const BarredSkewTableau& t) { return where(t.shape(), t.n()) + ", T = " + t.to_json().dump(); }

std::vector<int> plus_rho(std::vector<int> v) {
  const int n = static_cast<int>(v.size());
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] += n - 1 - k;
  return v;
}

class AlternantCache {
 public:
  const Polynomial& get(const std::vector<int>& xi) {
    auto it = cache_.find(xi);
    if (it == cache_.end()) it = cache_.emplace(xi, alternant(xi, static_cast<int>(xi.size()))).first;
    return it->second;
  }

 private:
  std::map<std::vector<int>, Polynomial> cache_;
};

/// Every multishape with at most r diagrams and max_boxes boxes, for each n in 1..max_n.
template <typename F>
void sweep_shapes(const VerifyBounds& b, F&& body) {
  for (int n = 1; n <= b.n; ++n) {
    for (const auto& shape : multishapes_up_to(b.r, n, b.max_boxes)) body(shape, n);
  }
}

/// A random barred tableau of the given shape: each box takes a uniformly
/// chosen value among those compatible with the boxes above and to the left.
BarredSkewTableau random_tableau(const MultiShape& shape, int n, std::mt19937_64& rng) {
  std::vector<BarredEntry> entries;
  std::bernoulli_distribution coin(0.5);
  for (int d = 1; d <= shape.count(); ++d) {
    const Partition& lambda = shape.diagram(d);
    const Partition conj = lambda.conjugate();
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length()));
    for (int row = 1; row <= lambda.length(); ++row) {
      for (int col = 1; col <= lambda[row]; ++col) {
        int low = 1;
        if (col > 1) low = std::max(low, grid[row - 1][col - 2]);
        if (row > 1) low = std::max(low, grid[row - 2][col - 1] + 1);
        const int high = n - (conj[col] - row);
        const int v = std::uniform_int_distribution<int>(low, high)(rng);
        grid[row - 1].push_back(v);
        entries.push_back({v, coin(rng)});
      }
    }
  }
  return BarredSkewTableau(shape, n, std::move(entries));
}

MultiShape random_shape(int max_r, int n, int max_boxes, std::mt19937_64& rng) {
  std::vector<Partition> diagrams;
  const int r = std::uniform_int_distribution<int>(1, std::max(1, max_r))(rng);
  int budget = max_boxes;
  for (int d = 0; d < r; ++d) {
    std::vector<int> parts;
    const int rows = std::uniform_int_distribution<int>(0, n)(rng);
    int prev = budget;
    for (int row = 0; row < rows && budget > 0; ++row) {
      const int part = std::uniform_int_distribution<int>(1, std::max(1, std::min(prev, budget)))(rng);
      parts.push_back(part);
      prev = part;
      budget -= part;
    }
    diagrams.emplace_back(std::move(parts));
  }
  return MultiShape(std::move(diagrams));
}

void check_involution_at(Checker& c, const BarredSkewTableau& t) {
  const Monomial w = weight_monomial(t);
  const ContentVector omega = unbarred_content(t);
  for (int i = 1; i < t.n(); ++i) {
    const BarredSkewTableau s = bender_knuth(t, i);
    const std::string invalid = s.validate();
    c.check(invalid.empty(), [&] { return "s_" + std::to_string(i) + " T is not a tableau (" + invalid + "), " + where(t); });
    c.check(bender_knuth(s, i) == t, [&] { return "s_" + std::to_string(i) + " is not an involution at " + where(t); });
    c.check(weight_monomial(s) == w, [&] { return "s_" + std::to_string(i) + " changes the weight of " + where(t); });
    const int word[] = {i};
    c.check(unbarred_content(s) == permute_vector(omega, word),
            [&] { return "s_" + std::to_string(i) + " does not transpose the content of " + where(t); });
  }
}

/// All words of length <= max_len over 1..n-1.
std::vector<std::vector<int>> transposition_words(int n, int max_len) {
  std::vector<std::vector<int>> out = {{}};
  std::vector<std::vector<int>> frontier = {{}};
  for (int len = 1; len <= max_len && n >= 2; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (int i = 1; i < n; ++i) {
        auto v = w;
        v.push_back(i);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

SuiteReport suite_involutions(const VerifyBounds& b) {
  SuiteReport report;
  report.suite = "involutions";
  Checker c(report);
  const int n = b.n;
  const auto words = transposition_words(n, 3);
  for (const auto& shape : multishapes_up_to(b.r, n, b.max_boxes)) {
    enumerate_barred(shape, n, [&](const BarredSkewTableau& t) {
      check_involution_at(c, t);
      const Monomial w = weight_monomial(t);
      const ContentVector omega = unbarred_content(t);
      for (const auto& word : words) {
        const BarredSkewTableau s = apply_permutation(t, word);
        c.check(weight_monomial(s) == w && unbarred_content(s) == permute_vector(omega, word), [&] {
          std::string ws;
          for (int i : word) ws += std::to_string(i);
          return "word " + ws + " breaks weight or content at " + where(t);
        });
      }
    });
  }
  std::mt19937_64 rng(b.seed);
  for (int k = 0; k < b.random_samples; ++k) {
    const int n_big = n + 1;
    const MultiShape shape = random_shape(b.r, n_big, b.max_boxes + 3, rng);
    check_involution_at(c, random_tableau(shape, n_big, rng));
  }
  return report;
}

SuiteReport suite_cancellation(const VerifyBounds& b) {
  SuiteReport report;
  report.suite = "cancellation";
  Checker c(report);
  sweep_shapes(b, [&](const MultiShape& shape, int n) {
    AlternantCache alt;
    std::map<ContentVector, PolynomialAccumulator> bad_weights;
    enumerate_barred(shape, n, [&](const BarredSkewTableau& t) {
      const auto pair = bad_guy_pair(t);
      const bool good = is_yamanouchi(column_word(t));
      c.check(good == !pair.has_value(), [&] { return "bad_guy_pair disagrees with the Yamanouchi test at " + where(t); });
      if (!pair) return;
      const BarredSkewTableau& u = *pair;
      const auto sel = bad_guy_selection(t);
      const std::vector<int> rt = plus_rho(unbarred_content(t));
      const std::vector<int> ru = plus_rho(unbarred_content(u));
      bad_weights[unbarred_content(t)].add(weight_monomial(t), 1);
      const std::string invalid = u.validate();
      c.check(invalid.empty(), [&] { return "T* is not a tableau (" + invalid + "), " + where(t); });
      const auto back = bad_guy_pair(u);
      c.check(back && *back == t, [&] { return "(T*)* != T at " + where(t); });
      c.check(weight_monomial(u) == weight_monomial(t), [&] { return "T* changes the weight at " + where(t); });
      std::vector<int> swapped = rt;
      std::swap(swapped[static_cast<std::size_t>(sel->index - 1)], swapped[static_cast<std::size_t>(sel->index)]);
      c.check(ru == swapped, [&] { return "rho + omega(T*) is not sigma_i(rho + omega(T)) at " + where(t); });
      if (u == t) {
        c.check(alt.get(rt).is_zero(), [&] { return "fixed point with nonzero alternant at " + where(t); });
      } else {
        c.check(alt.get(ru) == -alt.get(rt), [&] { return "paired alternants do not cancel at " + where(t); });
      }
    });
    PolynomialAccumulator total;
    for (auto& [content, acc] : bad_weights) {
      total.add(alt.get(plus_rho(content)) * std::move(acc).finish());
    }
    c.check(std::move(total).finish().is_zero(),
            [&] { return "non-Yamanouchi alternant sum is nonzero for " + where(shape, n); });
  });
  return report;
}

SuiteReport suite_lemma3(const VerifyBounds& b, FactorialSchurCache* cache) {
  SuiteReport report;
  report.suite = "lemma3";
  Checker c(report);
  sweep_shapes(b, [&](const MultiShape& shape, int n) {
    AlternantCache alt;
    std::map<ContentVector, PolynomialAccumulator> all;
    std::map<ContentVector, PolynomialAccumulator> good;
    enumerate_barred(shape, n, [&](const BarredSkewTableau& t) {
      const ContentVector omega = unbarred_content(t);
      const Monomial w = weight_monomial(t);
      all[omega].add(w, 1);
      if (is_yamanouchi(column_word(t))) good[omega].add(w, 1);
    });
    const Polynomial product = product_factorial_schur(shape, n, cache);
    const Polynomial lhs = alt.get(rho(n)) * product;
    PolynomialAccumulator monomial_sum;
    PolynomialAccumulator all_sum;
    PolynomialAccumulator good_sum;
    for (auto& [omega, acc] : all) {
      const Polynomial weights = std::move(acc).finish();
      monomial_sum.add_shifted(weights, Monomial::x_power(omega));
      all_sum.add(alt.get(plus_rho(omega)) * weights);
    }
    for (auto& [omega, acc] : good) good_sum.add(alt.get(plus_rho(omega)) * std::move(acc).finish());
    c.check(std::move(monomial_sum).finish() == product,
            [&] { return "sum of x^omega(T) c_T(y) differs from the product for " + where(shape, n); });
    c.check(std::move(all_sum).finish() == lhs,
            [&] { return "alternant identity over all tableaux fails for " + where(shape, n); });
    c.check(std::move(good_sum).finish() == lhs,
            [&] { return "alternant identity over Yamanouchi tableaux fails for " + where(shape, n); });
  });
  return report;
}

SuiteReport suite_theorem(const VerifyBounds& b, FactorialSchurCache* cache) {
  SuiteReport report;
  report.suite = "theorem";
  Checker c(report);
  sweep_shapes(b, [&](const MultiShape& shape, int n) {
    const CoeffTable lr = lr_expand(shape, n);
    const CoeffTable oracle = oracle_expand(shape, n, cache);
    const int boxes = shape.total_boxes();
    for (const auto& mu : partitions_in_box(n, boxes, boxes)) {
      const Polynomial value = lr.at(mu);
      c.check(value == oracle.at(mu), [&] {
        return "c^" + mu.to_string() + " = " + value.to_string() + " but the oracle gives " +
               oracle.at(mu).to_string() + " for " + where(shape, n);
      });
      if (value.is_zero()) continue;
      c.check(lr_coefficient(shape, mu, n) == value,
              [&] { return "lr_coefficient disagrees with lr_expand at mu = " + mu.to_string() + ", " + where(shape, n); });
      c.check(value.is_homogeneous() && value.degree() == boxes - mu.size() && !value.has_x(),
              [&] { return "coefficient is not homogeneous of degree |shape| - |mu| at " + where(shape, n); });
    }
    for (const auto& [mu, p] : oracle.entries()) {
      c.check(mu.size() <= boxes, [&] { return "oracle produced mu outside the box bound at " + where(shape, n); });
    }
  });
  return report;
}

SuiteReport suite_basis(const VerifyBounds& b) {
  SuiteReport report;
  report.suite = "basis";
  Checker c(report);
  const int size = b.max_size;

  for (int N = 1; N <= 6; ++N) {
    const auto [a, bm] = matrix_AB(N);
    const PolyMatrix id = PolyMatrix::identity(static_cast<std::size_t>(N));
    c.check(a * bm == id && bm * a == id, [&] { return "AB != I for N = " + std::to_string(N); });
  }

  for (int n = 1; n <= std::max(b.n, size); ++n) {
    for (int m = 1; m <= size; ++m) {
      for (const auto& nu : partitions_in_box(n, m, n * m)) {
        const IndexSet set = partition_to_index_set(nu, n, m);
        const Partition nu_c = complement(nu, n, m);
        const std::string at = "nu = " + nu.to_string() + ", n = " + std::to_string(n) + ", m = " + std::to_string(m);
        c.check(set.inversion_count() == nu.size() && set.shifted_rank() == nu.size() - n,
                [&] { return "index-set rank statistic fails at " + at; });
        c.check(set.complement() == partition_to_index_set(nu_c, m, n),
                [&] { return "complement of I_nu is not I_{nu^c} at " + at; });
        c.check(index_set_to_partition(set) == nu, [&] { return "index set does not round-trip at " + at; });
        c.check(complement(nu_c, m, n) == nu && nu.size() + nu_c.size() == n * m,
                [&] { return "complement is not an area-preserving involution at " + at; });
      }
    }
  }

  for (int n = 1; n <= b.n; ++n) {
    const auto parts = partitions_in_box(n, size, size);
    std::vector<Partition> by_size(parts.begin(), parts.end());
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const Partition& x, const Partition& y) { return x.size() < y.size(); });
    const std::size_t k = by_size.size();
    std::vector<std::vector<Polynomial>> cm(k, std::vector<Polynomial>(k));
    std::vector<std::vector<Polynomial>> dm(k, std::vector<Polynomial>(k));
    const auto [a, bm] = matrix_AB(n + size);
    for (std::size_t i = 0; i < k; ++i) {
      const Partition& lambda = by_size[i];
      for (std::size_t j = 0; j < k; ++j) {
        const Partition& mu = by_size[j];
        const std::string at = "lambda = " + lambda.to_string() + ", mu = " + mu.to_string() + ", n = " + std::to_string(n);
        cm[i][j] = c_coeff_det(lambda, mu, n);
        dm[i][j] = d_coeff_det(lambda, mu, n);
        c.check(cm[i][j] == lr_coefficient(MultiShape{lambda}, mu, n),
                [&] { return "determinant c differs from the tableau rule at " + at; });
        const auto rows = index_rows(lambda, n);
        const auto cols = index_rows(mu, n);
        c.check(det(a.submatrix(rows, cols)) == cm[i][j], [&] { return "c is not the minor of A at " + at; });
        const int m0 = std::max(lambda.width(), mu.width());
        c.check(d_coeff_dual(lambda, mu, n, m0) == dm[i][j] && d_coeff_dual(lambda, mu, n, m0 + 1) == dm[i][j],
                [&] { return "dual d formula differs (or is m-unstable) at " + at; });
        c.check(c_coeff_dual(lambda, mu, n, m0) == cm[i][j],
                [&] { return "dual c formula differs at " + at; });
        c.check(dm[i][j].is_zero() || (dm[i][j].is_homogeneous() && dm[i][j].degree() == lambda.size() - mu.size()),
                [&] { return "d is not homogeneous of degree |lambda| - |mu| at " + at; });
      }
    }
    // Inverse of the unitriangular c matrix by forward substitution.
    std::vector<std::vector<Polynomial>> inv(k, std::vector<Polynomial>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        PolynomialAccumulator acc;
        if (i == j) acc.add(Polynomial(1));
        for (std::size_t l = 0; l < k; ++l) {
          if (by_size[l].size() < by_size[i].size() && !cm[i][l].is_zero()) acc.add(-(cm[i][l] * inv[l][j]));
        }
        inv[i][j] = std::move(acc).finish();
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const std::string at = "lambda = " + by_size[i].to_string() + ", mu = " + by_size[j].to_string() +
                               ", n = " + std::to_string(n);
        c.check(dm[i][j] == inv[i][j], [&] { return "d differs from the inverse of the c matrix at " + at; });
        PolynomialAccumulator acc;
        for (std::size_t l = 0; l < k; ++l) acc.add(cm[i][l] * dm[l][j]);
        c.check(std::move(acc).finish() == Polynomial(i == j ? 1 : 0),
                [&] { return "sum_nu c d != delta at " + at; });
      }
    }
  }
  return report;
}

SuiteReport suite_remark(const VerifyBounds& b, FactorialSchurCache* cache) {
  SuiteReport report;
  report.suite = "remark";
  Checker c(report);
  for (int n = 1; n <= b.n; ++n) {
    for (const auto& shape : multishapes_up_to(2, n, b.max_boxes)) {
      if (shape.count() != 2) continue;
      const CoeffTable lr = lr_expand(shape, n);
      const int boxes = shape.total_boxes();
      for (const auto& mu : partitions_in_box(n, boxes, boxes)) {
        c.check(compose_via_classical(shape, mu, n) == lr.at(mu), [&] {
          return "composition through classical coefficients differs at mu = " + mu.to_string() + ", " +
                 where(shape, n);
        });
      }
    }
  }
  YSpecialization zero;
  for (int f = 1; f <= std::max(2, b.r); ++f) zero.zero_family(f);
  for (int n = 1; n <= std::min(b.n, 2); ++n) {
    for (const auto& shape : multishapes_up_to(b.r, n, std::min(b.max_boxes, 5))) {
      const Polynomial product = product_factorial_schur(shape, n, cache);
      for (int target = 1; target <= shape.count(); ++target) {
        const CoeffTable e = expand_in_factorial(shape, n, target);
        PolynomialAccumulator acc;
        for (const auto& [mu, p] : e.entries()) {
          acc.add(p * (cache ? cache->get(mu, n, target) : factorial_schur(mu, n, target)));
        }
        c.check(std::move(acc).finish() == product, [&] {
          return "factorial-basis expansion (family " + std::to_string(target) + ") does not reconstruct " +
                 where(shape, n);
        });
        if (shape.count() == 1) {
          c.check(e.size() == 1 && e.at(shape.diagram(1)) == Polynomial(1),
                  [&] { return "a factorial Schur function does not expand to itself: " + where(shape, n); });
        }
        if (shape.count() == 2) {
          const CoeffTable e0 = specialize(e, zero);
          const int boxes = shape.total_boxes();
          for (const auto& mu : partitions_in_box(n, boxes, boxes)) {
            const long classical = mu.size() == boxes ? classical_lr(shape.diagram(1), shape.diagram(2), mu, n) : 0;
            c.check(e0.at(mu) == Polynomial(classical), [&] {
              return "e at y = 0 is not the classical coefficient at mu = " + mu.to_string() + ", " + where(shape, n);
            });
          }
        }
      }
    }
  }
  return report;
}

SuiteReport run_one(const std::string& name, const VerifyBounds& b, FactorialSchurCache* cache) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  if (name == "involutions") {
    report = suite_involutions(b);
  } else if (name == "cancellation") {
    report = suite_cancellation(b);
  } else if (name == "lemma3") {
    report = suite_lemma3(b, cache);
  } else if (name == "theorem") {
    report = suite_theorem(b, cache);
  } else if (name == "basis") {
    report = suite_basis(b);
  } else if (name == "remark") {
    report = suite_remark(b, cache);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyBounds& bounds, FactorialSchurCache* cache) {
  if (bounds.n < 1 || bounds.r < 0 || bounds.max_boxes < 0 || bounds.max_size < 0 || bounds.random_samples < 0) {
    throw std::invalid_argument("verification bounds must be nonnegative and n >= 1");
  }
  FactorialSchurCache local;
  if (!cache) cache = &local;
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_one(name, bounds, cache));
  } else {
    out.push_back(run_one(suite, bounds, cache));
  }
  return out;
}

}  // namespace fslr
