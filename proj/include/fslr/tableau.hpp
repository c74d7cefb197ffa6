#pragma once

// Multi-diagram skew shapes and barred skew tableaux.
//
// A MultiShape (l1, ..., lr) places each Young diagram strictly below and
// strictly to the left of the previous one, so no two diagrams share a row
// or a column.  Global columns are numbered 1..sum(width) from the left;
// diagram r is leftmost and diagram 1 rightmost.  Cells are addressed by
// (diagram, local row, local column), all 1-based.

#include "fslr/partition.hpp"
#include "fslr/polynomial.hpp"

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fslr {

class MultiShape {
 public:
  MultiShape() = default;
  explicit MultiShape(std::vector<Partition> diagrams);
  MultiShape(std::initializer_list<Partition> diagrams)
      : MultiShape(std::vector<Partition>(diagrams)) {}

  const std::vector<Partition>& diagrams() const { return diagrams_; }
  /// Number of diagrams r.
  int count() const { return static_cast<int>(diagrams_.size()); }
  /// 1-based.
  const Partition& diagram(int i) const;
  int total_boxes() const;
  int total_columns() const { return total_columns_; }
  /// Global column of local column c in diagram i is offset(i) + c.
  int column_offset(int i) const;
  /// Rows above diagram i in the drawn skew diagram.
  int row_offset(int i) const;
  /// (diagram, local column) owning a global column.
  std::pair<int, int> locate_column(int global_column) const;
  /// Every diagram has at most n nonzero parts.
  bool fits(int n) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static MultiShape from_json(const nlohmann::json& j);

  friend bool operator==(const MultiShape& a, const MultiShape& b) {
    return a.diagrams_ == b.diagrams_;
  }

 private:
  std::vector<Partition> diagrams_;
  std::vector<int> column_offsets_;
  int total_columns_ = 0;
};

struct Cell {
  int diagram = 1;
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct BarredEntry {
  int value = 1;
  bool barred = false;
  friend bool operator==(const BarredEntry&, const BarredEntry&) = default;
};

/// Vector of length n; entry k-1 counts the unbarred k's.
using ContentVector = std::vector<int>;

/// The cells of a shape lying in a window of global columns.
class CellLayout {
 public:
  CellLayout(MultiShape shape, int n, int first_column, int last_column);

  const MultiShape& shape() const { return shape_; }
  int n() const { return n_; }
  int first_column() const { return first_column_; }
  int last_column() const { return last_column_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::optional<std::size_t> index_of(const Cell& c) const;
  /// Cell indices of a global column, top to bottom.
  const std::vector<std::size_t>& column(int global_column) const;

  friend bool operator==(const CellLayout& a, const CellLayout& b) {
    return a.n_ == b.n_ && a.first_column_ == b.first_column_ && a.last_column_ == b.last_column_ &&
           a.shape_ == b.shape_;
  }

 private:
  MultiShape shape_;
  int n_;
  int first_column_;
  int last_column_;
  std::vector<Cell> cells_;
  // Per diagram, per row: index of the row's first cell in the window and
  // the local column of that cell.
  std::vector<std::vector<std::pair<std::size_t, int>>> row_start_;
  std::vector<std::vector<std::size_t>> columns_;
};

/// Filling of (a column window of) a MultiShape by entries 1..n, each
/// optionally barred; rows weakly increase and columns strictly increase
/// by value, bars ignored.
class BarredSkewTableau {
 public:
  /// Full tableau; entries in (diagram, row, column) order.  Validates.
  BarredSkewTableau(MultiShape shape, int n, std::vector<BarredEntry> entries);
  /// Tableau on a shared layout.  Validates.
  BarredSkewTableau(std::shared_ptr<const CellLayout> layout, std::vector<BarredEntry> entries);
  /// Skips validation; for enumerators that construct valid fillings.
  static BarredSkewTableau trusted(std::shared_ptr<const CellLayout> layout,
                                   std::vector<BarredEntry> entries);

  const MultiShape& shape() const { return layout_->shape(); }
  int n() const { return layout_->n(); }
  const CellLayout& layout() const { return *layout_; }
  const std::shared_ptr<const CellLayout>& layout_ptr() const { return layout_; }
  std::span<const Cell> cells() const { return layout_->cells(); }
  std::span<const BarredEntry> entries() const { return entries_; }
  std::size_t box_count() const { return entries_.size(); }
  bool is_full() const;
  const BarredEntry& at(const Cell& c) const;
  /// Same layout, new entries (validated).
  BarredSkewTableau with_entries(std::vector<BarredEntry> entries) const;

  /// Empty string when valid, else the first violated condition.
  std::string validate() const;
  bool has_bars() const;

  /// {"shape": [[parts],...], "cells": [{"d","r","c","v","b"},...]}
  nlohmann::json to_json() const;
  static BarredSkewTableau from_json(const nlohmann::json& j, int n);
  /// ASCII art; barred entries carry a trailing `~`.
  std::string render() const;

  friend bool operator==(const BarredSkewTableau& a, const BarredSkewTableau& b) {
    return a.entries_ == b.entries_ && (a.layout_ == b.layout_ || *a.layout_ == *b.layout_);
  }

 private:
  BarredSkewTableau() = default;
  std::shared_ptr<const CellLayout> layout_;
  std::vector<BarredEntry> entries_;
};

/// Unbarred entries, columns right to left, each column top to bottom.
std::vector<int> column_word(const BarredSkewTableau& t);
/// Every prefix has at least as many k's as (k+1)'s.
bool is_yamanouchi(std::span<const int> word);
ContentVector unbarred_content(const BarredSkewTableau& t);
/// Product over barred cells a of y^(i(a))_{value(a) + c(a) - r(a)}, local
/// coordinates inside diagram i(a).
Polynomial weight(const BarredSkewTableau& t);
/// The weight as a monomial.
Monomial weight_monomial(const BarredSkewTableau& t);

using TableauVisitor = std::function<void(const BarredSkewTableau&)>;

/// Every barred skew tableau of the shape with values in 1..n.  Per diagram,
/// fillings are produced in lexicographic order of their row-major reading
/// words (entries ordered 1 < 1~ < 2 < 2~ < ...); the full stream is the
/// cross product in diagram order with the last diagram varying fastest.
void enumerate_barred(const MultiShape& shape, int n, const TableauVisitor& visit);
std::vector<BarredSkewTableau> enumerate_barred(const MultiShape& shape, int n);

/// Semistandard (bar-free) tableaux of one shape, same ordering.
void enumerate_semistandard(const Partition& lambda, int n, const TableauVisitor& visit);
std::vector<BarredSkewTableau> enumerate_semistandard(const Partition& lambda, int n);

/// All row-major fillings of one diagram.  Exposed for the enumerators.
std::vector<std::vector<BarredEntry>> diagram_fillings(const Partition& lambda, int n, bool allow_bars);

/// Every multishape of r diagrams (empty diagrams allowed) with each
/// diagram in P_n and total boxes at most max_boxes.
std::vector<MultiShape> multishapes_up_to(int r, int n, int max_boxes);

}  // namespace fslr
