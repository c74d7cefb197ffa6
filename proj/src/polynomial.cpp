#include "fslr/polynomial.hpp"

#include "fslr/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fslr {

// ---------------------------------------------------------------------------
// VarId

VarId VarId::x(int index) {
  if (index < 1 || static_cast<std::uint32_t>(index) > kIndexMask) {
    throw std::out_of_range("x variable index out of range: " + std::to_string(index));
  }
  return VarId(static_cast<std::uint32_t>(index));
}

VarId VarId::y(int family, int index) {
  if (family < 1 || family >= (1 << (32 - kIndexBits))) {
    throw std::out_of_range("y family out of range: " + std::to_string(family));
  }
  if (index < 1 || static_cast<std::uint32_t>(index) > kIndexMask) {
    throw std::out_of_range("y variable index out of range: " + std::to_string(index));
  }
  return VarId((static_cast<std::uint32_t>(family) << kIndexBits) |
               static_cast<std::uint32_t>(index));
}

std::string VarId::name() const {
  if (is_x()) return "x" + std::to_string(index());
  return "y" + std::to_string(family()) + "_" + std::to_string(index());
}

std::string VarId::latex() const {
  if (is_x()) return "x_{" + std::to_string(index()) + "}";
  return "y^{(" + std::to_string(family()) + ")}_{" + std::to_string(index()) + "}";
}

namespace {

int parse_positive(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
    throw std::invalid_argument("malformed variable name: " + std::string(whole));
  }
  return value;
}

}  // namespace

VarId VarId::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed variable name: " + std::string(text));
  if (text[0] == 'x') return x(parse_positive(text.substr(1), text));
  if (text[0] == 'y') {
    auto us = text.find('_');
    if (us == std::string_view::npos) {
      throw std::invalid_argument("malformed variable name: " + std::string(text));
    }
    return y(parse_positive(text.substr(1, us - 1), text), parse_positive(text.substr(us + 1), text));
  }
  throw std::invalid_argument("malformed variable name: " + std::string(text));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::of(VarId v, std::uint32_t exponent) {
  return Monomial(std::vector<Factor>{{v, exponent}});
}

Monomial Monomial::x_power(std::span<const int> exponents) {
  std::vector<Factor> f;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
    if (exponents[i] > 0) {
      f.emplace_back(VarId::x(static_cast<int>(i) + 1), static_cast<std::uint32_t>(exponents[i]));
    }
  }
  return Monomial(std::move(f));
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::has_x() const { return !factors_.empty() && factors_.front().first.is_x(); }

std::pair<Monomial, Monomial> Monomial::split_xy() const {
  Monomial xs;
  Monomial ys;
  for (const auto& f : factors_) {
    Monomial& target = f.first.is_x() ? xs : ys;
    target.factors_.push_back(f);
    target.degree_ += f.second;
  }
  return {std::move(xs), std::move(ys)};
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool Monomial::grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  for (; ia != a.factors_.end() && ib != b.factors_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia != a.factors_.end() && ib == b.factors_.end();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [v, e] : factors_) {
    std::size_t k = (static_cast<std::size_t>(v.code()) << 16) ^ e;
    h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_order(const Term& a, const Term& b) {
  return Monomial::grlex_greater(a.monomial, b.monomial);
}

// Merge two sorted term lists, scaling the second by `sign` (+1 or -1).
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (Monomial::grlex_greater(ia->monomial, ib->monomial)) {
      out.push_back(*ia++);
    } else if (Monomial::grlex_greater(ib->monomial, ia->monomial)) {
      out.push_back({ib->monomial, sign > 0 ? ib->coeff : Integer(-ib->coeff)});
      ++ib;
    } else {
      Integer c = sign > 0 ? Integer(ia->coeff + ib->coeff) : Integer(ia->coeff - ib->coeff);
      if (c != 0) out.push_back({ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) out.push_back(*ia);
  for (; ib != b.end(); ++ib) {
    out.push_back({ib->monomial, sign > 0 ? ib->coeff : Integer(-ib->coeff)});
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.push_back({Monomial(), constant});
}

Polynomial Polynomial::variable(VarId v) { return term(Monomial::of(v)); }

Polynomial Polynomial::term(Monomial m, Integer coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return Monomial::grlex_greater(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

bool Polynomial::has_x() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.monomial.has_x(); });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, q.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (q.terms_.size() == 1) {
    Polynomial out;
    out.terms_.reserve(p.terms_.size());
    for (const auto& t : p.terms_) {
      out.terms_.push_back({t.monomial * q.terms_[0].monomial, t.coeff * q.terms_[0].coeff});
    }
    return out;  // monomial multiplication preserves the order
  }
  if (p.terms_.size() == 1) return q * p;
  PolynomialAccumulator acc;
  for (const auto& t : q.terms_) acc.add_shifted(p, t.monomial, t.coeff);
  return std::move(acc).finish();
}

Polynomial operator*(const Integer& c, const Polynomial& p) {
  if (c == 0) return {};
  Polynomial out = p;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial)) {
      return false;
    }
  }
  return true;
}

namespace {

// m / d when d divides m.
std::optional<Monomial> monomial_quotient(const Monomial& m, const Monomial& d) {
  std::vector<Monomial::Factor> out;
  auto im = m.factors().begin();
  for (const auto& [v, e] : d.factors()) {
    while (im != m.factors().end() && im->first < v) out.push_back(*im++);
    if (im == m.factors().end() || im->first != v || im->second < e) return std::nullopt;
    if (im->second > e) out.emplace_back(v, im->second - e);
    ++im;
  }
  out.insert(out.end(), im, m.factors().end());
  return Monomial(std::move(out));
}

}  // namespace

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& q) const {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Term& lead = q.terms_.front();
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& top = rem.terms_.front();
    auto m = monomial_quotient(top.monomial, lead.monomial);
    if (!m || !mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Integer c = top.coeff / lead.coeff;
    quotient.push_back({*m, c});
    rem -= Polynomial::term(*m, c) * q;
  }
  return Polynomial::from_terms(std::move(quotient));
}

Polynomial Polynomial::substitute(const std::function<std::optional<Integer>(VarId)>& value) const {
  PolynomialAccumulator acc;
  for (const auto& t : terms_) {
    Integer c = t.coeff;
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (auto val = value(v)) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), val->get_mpz_t(), e);
        c *= pw;
        if (c == 0) break;
      } else {
        kept.emplace_back(v, e);
      }
    }
    if (c != 0) acc.add(Monomial(std::move(kept)), c);
  }
  return std::move(acc).finish();
}

Polynomial Polynomial::negate_family(int family) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) {
    std::uint32_t odd = 0;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (v.is_y() && (family == 0 || v.family() == family)) odd ^= (e & 1u);
    }
    if (odd) t.coeff = -t.coeff;
  }
  return out;
}

Polynomial Polynomial::rename_family(int from, int to) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> f;
    for (const auto& [v, e] : t.monomial.factors()) {
      f.emplace_back(v.is_y() && v.family() == from ? VarId::y(to, v.index()) : v, e);
    }
    out.push_back({Monomial(std::move(f)), t.coeff});
  }
  return from_terms(std::move(out));
}

namespace {

std::string monomial_text(const Monomial& m, bool latex) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!latex && !s.empty()) s += '*';
    if (latex) {
      // y^{(f)}_{j} already carries a superscript, so powers need a group.
      s += e == 1 ? v.latex() : (v.is_y() ? "{" + v.latex() + "}" : v.latex()) + "^{" + std::to_string(e) + "}";
    } else {
      s += v.name();
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

std::string render(const std::vector<Term>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms) {
    bool negative = t.coeff < 0;
    Integer mag = abs(t.coeff);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += monomial_text(t.monomial, latex);
    } else {
      s += mag.get_str();
      s += latex ? " " : "*";
      s += monomial_text(t.monomial, latex);
    }
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const { return render(terms_, false); }

std::string Polynomial::to_latex() const { return render(terms_, true); }

nlohmann::json Polynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [v, e] : t.monomial.factors()) vars.push_back({v.name(), e});
    out.push_back({{"coeff", t.coeff.get_str()}, {"vars", std::move(vars)}});
  }
  return out;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("vars") || !t["coeff"].is_string() ||
        !t["vars"].is_array()) {
      throw std::invalid_argument("polynomial term must be {coeff: string, vars: array}");
    }
    Integer c;
    if (c.set_str(t["coeff"].get<std::string>(), 10) != 0) {
      throw std::invalid_argument("malformed coefficient: " + t["coeff"].get<std::string>());
    }
    std::vector<Monomial::Factor> f;
    for (const auto& pair : t["vars"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_number_unsigned()) {
        throw std::invalid_argument("variable entry must be [name, exponent]");
      }
      f.emplace_back(VarId::parse(pair[0].get<std::string>()), pair[1].get<std::uint32_t>());
    }
    terms.push_back({Monomial(std::move(f)), std::move(c)});
  }
  return from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// PolynomialAccumulator

void PolynomialAccumulator::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolynomialAccumulator::add(const Polynomial& p) {
  for (const auto& t : p.terms()) add(t.monomial, t.coeff);
}

void PolynomialAccumulator::add_scaled(const Polynomial& p, const Integer& c) {
  if (c == 0) return;
  for (const auto& t : p.terms()) add(t.monomial, t.coeff * c);
}

void PolynomialAccumulator::add_shifted(const Polynomial& p, const Monomial& m, const Integer& c) {
  if (c == 0) return;
  for (const auto& t : p.terms()) add(t.monomial * m, t.coeff * c);
}

Polynomial PolynomialAccumulator::finish() && {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& [m, c] : terms_) {
    if (c != 0) out.push_back({m, std::move(c)});
  }
  terms_.clear();
  return Polynomial::from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial coefficient_of_x(const Polynomial& p, std::span<const int> exponent) {
  const Monomial target = Monomial::x_power(exponent);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    auto [xs, ys] = t.monomial.split_xy();
    if (xs == target) out.push_back({std::move(ys), t.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

std::map<std::vector<int>, Polynomial> split_by_x(const Polynomial& p, int n) {
  std::map<std::vector<int>, std::vector<Term>> grouped;
  for (const auto& t : p.terms()) {
    auto [xs, ys] = t.monomial.split_xy();
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (const auto& [v, k] : xs.factors()) {
      if (v.index() > n) throw std::out_of_range("x variable beyond ambient n: " + v.name());
      e[static_cast<std::size_t>(v.index() - 1)] = static_cast<int>(k);
    }
    grouped[e].push_back({std::move(ys), t.coeff});
  }
  std::map<std::vector<int>, Polynomial> out;
  for (auto& [e, terms] : grouped) out.emplace(e, Polynomial::from_terms(std::move(terms)));
  return out;
}

namespace {

constexpr int kPermutationSumLimit = 8;

bool has_repeat(std::span<const int> xi) {
  std::vector<int> v(xi.begin(), xi.end());
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

Polynomial alternant_by_permutations(std::span<const int> xi) {
  const int n = static_cast<int>(xi.size());
  if (has_repeat(xi)) return {};
  // Sum over sigma of sgn(sigma) prod_i x_i^{xi_{sigma(i)}}, permutations in
  // lexicographic order with the sign tracked by inversion parity.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  std::vector<int> e(static_cast<std::size_t>(n));
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    for (int i = 0; i < n; ++i) e[i] = xi[perm[i]];
    terms.push_back({Monomial::x_power(e), Integer(inversions % 2 ? -1 : 1)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(std::move(terms));
}

Polynomial alternant_by_cofactors(std::span<const int> xi) {
  const std::size_t n = xi.size();
  if (has_repeat(xi)) return {};
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (xi[j] < 0) throw std::invalid_argument("alternant exponents must be nonnegative");
      m(i, j) = Polynomial::term(Monomial::of(VarId::x(static_cast<int>(i) + 1),
                                              static_cast<std::uint32_t>(xi[j])));
    }
  }
  return det_cofactor(m);
}

Polynomial alternant(std::span<const int> xi, int n) {
  if (n < 0 || xi.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("alternant: exponent vector length " + std::to_string(xi.size()) +
                                " does not match n = " + std::to_string(n));
  }
  for (int e : xi) {
    if (e < 0) throw std::invalid_argument("alternant exponents must be nonnegative");
  }
  return n <= kPermutationSumLimit ? alternant_by_permutations(xi) : alternant_by_cofactors(xi);
}

Polynomial elementary_sym(int r, int p, int family, bool negate) {
  if (p < 0) throw std::invalid_argument("elementary_sym: negative variable count");
  if (r < 0 || r > p) return {};
  // table[k] = e_k(y_1..y_j) after processing j variables.
  std::vector<Polynomial> table(static_cast<std::size_t>(r) + 1);
  table[0] = Polynomial(1);
  for (int j = 1; j <= p; ++j) {
    const Polynomial yj = Polynomial::variable(VarId::y(family, j));
    for (int k = std::min(r, j); k >= 1; --k) table[k] += yj * table[k - 1];
  }
  Polynomial out = std::move(table[r]);
  return (negate && (r % 2 == 1)) ? -out : out;
}

Polynomial complete_sym(int r, int p, int family, bool negate) {
  if (p < 0) throw std::invalid_argument("complete_sym: negative variable count");
  if (r < 0) return {};
  if (r == 0) return Polynomial(1);
  if (p == 0) return {};
  // h_k(y_1..y_j) = h_k(y_1..y_{j-1}) + y_j h_{k-1}(y_1..y_j).
  std::vector<Polynomial> table(static_cast<std::size_t>(r) + 1);
  table[0] = Polynomial(1);
  for (int j = 1; j <= p; ++j) {
    const Polynomial yj = Polynomial::variable(VarId::y(family, j));
    for (int k = 1; k <= r; ++k) table[k] += yj * table[k - 1];
  }
  Polynomial out = std::move(table[r]);
  return (negate && (r % 2 == 1)) ? -out : out;
}

}  // namespace fslr
