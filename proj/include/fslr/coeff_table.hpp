#pragma once

#include "fslr/partition.hpp"
#include "fslr/polynomial.hpp"
#include "fslr/tableau.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

namespace fslr {

/// Expansion coefficients indexed by partitions.  Zero values are never
/// stored; iteration runs in descending lexicographic order of the keys.
class CoeffTable {
 public:
  using Map = std::map<Partition, Polynomial, PartitionDescending>;

  CoeffTable() = default;
  CoeffTable(MultiShape shape, int n) : shape_(std::move(shape)), n_(n) {}

  const MultiShape& shape() const { return shape_; }
  int n() const { return n_; }
  /// "schur" or "factorial" when the table is a change of basis.
  const std::optional<std::string>& basis() const { return basis_; }
  void set_basis(std::string basis) { basis_ = std::move(basis); }

  const Map& entries() const& { return entries_; }
  // A temporary table hands over its map, so range-for over a call result is safe.
  Map entries() && { return std::move(entries_); }
  std::size_t size() const { return entries_.size(); }
  /// Zero when absent.
  Polynomial at(const Partition& mu) const;
  /// Replaces the entry (erasing it when p is zero).
  void set(const Partition& mu, Polynomial p);
  void add(const Partition& mu, const Polynomial& p);

  friend bool operator==(const CoeffTable& a, const CoeffTable& b) { return a.entries_ == b.entries_; }

  nlohmann::json to_json() const;
  static CoeffTable from_json(const nlohmann::json& j);
  std::string to_latex() const;
  /// One `mu: poly` line per entry.
  std::string to_plain() const;

 private:
  MultiShape shape_;
  int n_ = 0;
  std::optional<std::string> basis_;
  Map entries_;
};

/// Values for y variables: whole families set to zero, and individual
/// variables set to integers.  Unlisted variables stay symbolic.
class YSpecialization {
 public:
  void zero_family(int family);
  void set(int family, int index, Integer value);
  bool empty() const { return zeroed_.empty() && values_.empty(); }
  std::optional<Integer> value_of(VarId v) const;
  Polynomial apply(const Polynomial& p) const;

  /// Parses `y<i>=0` (whole family, value must be 0) or `y<i>_<j>=<int>`.
  void parse_assignment(std::string_view text);

 private:
  std::vector<int> zeroed_;
  std::map<std::pair<int, int>, Integer> values_;
};

/// Substitutes into every entry, dropping entries that vanish.
CoeffTable specialize(const CoeffTable& table, const YSpecialization& spec);

}  // namespace fslr
