#pragma once

// Exact sparse multivariate polynomials over the integers in the variables
// x_1..x_n and the shift families y^(f)_1, y^(f)_2, ...

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fslr {

using Integer = mpz_class;

/// A variable, packed into one word.  The packed code orders variables as
/// x_1 < x_2 < ... < y^(1)_1 < y^(1)_2 < ... < y^(2)_1 < ...
class VarId {
 public:
  static constexpr std::uint32_t kIndexBits = 20;
  static constexpr std::uint32_t kIndexMask = (1u << kIndexBits) - 1;

  constexpr VarId() = default;

  static VarId x(int index);
  static VarId y(int family, int index);

  constexpr bool is_x() const { return family() == 0; }
  constexpr bool is_y() const { return family() != 0; }
  /// 0 for x variables.
  constexpr int family() const { return static_cast<int>(code_ >> kIndexBits); }
  constexpr int index() const { return static_cast<int>(code_ & kIndexMask); }
  constexpr std::uint32_t code() const { return code_; }

  /// `x3`, `y1_3`.
  std::string name() const;
  /// `x_{3}`, `y^{(1)}_{3}`.
  std::string latex() const;
  static VarId parse(std::string_view text);

  friend constexpr auto operator<=>(VarId, VarId) = default;

 private:
  constexpr explicit VarId(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// Product of variables with positive exponents, keys sorted by VarId.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  /// Sorts, merges repeated variables and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(VarId v, std::uint32_t exponent = 1);
  /// x_1^e_1 ... x_n^e_n.
  static Monomial x_power(std::span<const int> exponents);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(VarId v) const;
  bool has_x() const;

  /// Split into the x-part and the y-part.
  std::pair<Monomial, Monomial> split_xy() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  /// Graded lexicographic comparison: true iff a precedes b in the
  /// descending (leading term first) order.
  static bool grlex_greater(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Integer coeff;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Integer& constant);
  static Polynomial variable(VarId v);
  static Polynomial term(Monomial m, Integer coeff = 1);
  /// Builds from an arbitrary term list (any order, repeats, zeros allowed).
  static Polynomial from_terms(std::vector<Term> terms);

  /// Terms in descending graded lexicographic order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  /// Constant term (0 if absent).
  Integer constant_term() const;
  /// Coefficient of an exact monomial.
  Integer coefficient(const Monomial& m) const;
  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool has_x() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Integer& c, const Polynomial& p);
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Exact division; returns nullopt when q does not divide *this.
  std::optional<Polynomial> divide_exact(const Polynomial& q) const;

  /// Replace each variable v for which `value(v)` is engaged by that integer.
  Polynomial substitute(const std::function<std::optional<Integer>(VarId)>& value) const;
  /// y^(f)_j -> -y^(f)_j for every variable of family f (all families when f == 0).
  Polynomial negate_family(int family = 0) const;
  /// y^(from)_j -> y^(to)_j.
  Polynomial rename_family(int from, int to) const;

  /// Human-readable form, e.g. `x1^2*y1_3 - 2*x1*x2 + 5`.
  std::string to_string() const;
  std::string to_latex() const;
  /// [{"coeff": "-2", "vars": [["x1",1],["x2",1]]}, ...]
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  std::vector<Term> terms_;
};

/// Hash-map accumulator used where many products are summed.
class PolynomialAccumulator {
 public:
  void add(const Monomial& m, const Integer& c);
  void add(const Polynomial& p);
  /// this += c * p.
  void add_scaled(const Polynomial& p, const Integer& c);
  /// this += m * p.
  void add_shifted(const Polynomial& p, const Monomial& m, const Integer& c = 1);
  Polynomial finish() &&;

 private:
  std::unordered_map<Monomial, Integer, MonomialHash> terms_;
};

/// The y-polynomial multiplying x^exponent in p.
Polynomial coefficient_of_x(const Polynomial& p, std::span<const int> exponent);

/// All x-exponent vectors (length n) appearing in p, with their coefficients.
std::map<std::vector<int>, Polynomial> split_by_x(const Polynomial& p, int n);

/// det[(x_i)^{xi_j}] for 1 <= i,j <= n.
Polynomial alternant(std::span<const int> xi, int n);
/// The same determinant by signed permutation sum.
Polynomial alternant_by_permutations(std::span<const int> xi);
/// The same determinant by cofactor expansion of the monomial matrix.
Polynomial alternant_by_cofactors(std::span<const int> xi);

/// e_r(y^(family)_1..y^(family)_p), variables negated when `negate` is set.
Polynomial elementary_sym(int r, int p, int family, bool negate = false);
/// h_r(y^(family)_1..y^(family)_p), variables negated when `negate` is set.
Polynomial complete_sym(int r, int p, int family, bool negate = false);

}  // namespace fslr
