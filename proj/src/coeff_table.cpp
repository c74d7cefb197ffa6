#include "fslr/coeff_table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fslr {

Polynomial CoeffTable::at(const Partition& mu) const {
  auto it = entries_.find(mu);
  return it == entries_.end() ? Polynomial() : it->second;
}

void CoeffTable::set(const Partition& mu, Polynomial p) {
  if (p.is_zero()) {
    entries_.erase(mu);
  } else {
    entries_[mu] = std::move(p);
  }
}

void CoeffTable::add(const Partition& mu, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(mu, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

nlohmann::json CoeffTable::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [mu, p] : entries_) coeffs.push_back({{"mu", mu.to_json()}, {"poly", p.to_json()}});
  nlohmann::json out = {{"shape", shape_.to_json()}, {"n", n_}};
  if (basis_) out["basis"] = *basis_;
  out["coefficients"] = std::move(coeffs);
  return out;
}

CoeffTable CoeffTable::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("n") || !j.contains("coefficients") ||
      !j["n"].is_number_integer() || !j["coefficients"].is_array()) {
    throw std::invalid_argument("coefficient table JSON must be {shape, n, coefficients}");
  }
  CoeffTable t(MultiShape::from_json(j["shape"]), j["n"].get<int>());
  if (j.contains("basis")) {
    if (!j["basis"].is_string()) throw std::invalid_argument("basis must be a string");
    t.set_basis(j["basis"].get<std::string>());
  }
  for (const auto& e : j["coefficients"]) {
    if (!e.is_object() || !e.contains("mu") || !e.contains("poly")) {
      throw std::invalid_argument("coefficient entry must be {mu, poly}");
    }
    t.add(Partition::from_json(e["mu"]), Polynomial::from_json(e["poly"]));
  }
  return t;
}

std::string CoeffTable::to_latex() const {
  const bool factorial = basis_ && *basis_ == "factorial";
  std::string out;
  for (const auto& [mu, p] : entries_) {
    std::string parts;
    for (int k = 1; k <= mu.length(); ++k) parts += (k > 1 ? "," : "") + std::to_string(mu[k]);
    out += "c^{(" + parts + ")} &= " + p.to_latex() + (factorial ? " \\quad [s_{(" + parts + ")}(x\\,|\\,y)]" : "") +
           " \\\\\n";
  }
  return out;
}

std::string CoeffTable::to_plain() const {
  std::string out;
  for (const auto& [mu, p] : entries_) out += mu.to_string() + ": " + p.to_string() + "\n";
  return out;
}

void YSpecialization::zero_family(int family) {
  if (family < 1) throw std::invalid_argument("y family must be positive");
  if (std::find(zeroed_.begin(), zeroed_.end(), family) == zeroed_.end()) zeroed_.push_back(family);
}

void YSpecialization::set(int family, int index, Integer value) {
  if (family < 1 || index < 1) throw std::invalid_argument("y variable indices must be positive");
  values_[{family, index}] = std::move(value);
}

std::optional<Integer> YSpecialization::value_of(VarId v) const {
  if (!v.is_y()) return std::nullopt;
  if (std::find(zeroed_.begin(), zeroed_.end(), v.family()) != zeroed_.end()) return Integer(0);
  auto it = values_.find({v.family(), v.index()});
  if (it != values_.end()) return it->second;
  return std::nullopt;
}

Polynomial YSpecialization::apply(const Polynomial& p) const {
  if (empty()) return p;
  return p.substitute([this](VarId v) { return value_of(v); });
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw std::invalid_argument("malformed specialization: " + std::string(whole));
  }
  return v;
}

}  // namespace

void YSpecialization::parse_assignment(std::string_view text) {
  auto eq = text.find('=');
  if (text.empty() || text[0] != 'y' || eq == std::string_view::npos) {
    throw std::invalid_argument("malformed specialization: " + std::string(text));
  }
  std::string_view lhs = text.substr(1, eq - 1);
  std::string rhs(text.substr(eq + 1));
  Integer value;
  if (rhs.empty() || value.set_str(rhs, 10) != 0) {
    throw std::invalid_argument("malformed specialization value: " + std::string(text));
  }
  auto us = lhs.find('_');
  if (us == std::string_view::npos) {
    if (value != 0) throw std::invalid_argument("a whole family can only be set to 0: " + std::string(text));
    zero_family(parse_int(lhs, text));
  } else {
    set(parse_int(lhs.substr(0, us), text), parse_int(lhs.substr(us + 1), text), value);
  }
}

CoeffTable specialize(const CoeffTable& table, const YSpecialization& spec) {
  CoeffTable out(table.shape(), table.n());
  if (table.basis()) out.set_basis(*table.basis());
  for (const auto& [mu, p] : table.entries()) out.set(mu, spec.apply(p));
  return out;
}

}  // namespace fslr
