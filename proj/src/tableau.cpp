#include "fslr/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fslr {

// ---------------------------------------------------------------------------
// MultiShape

MultiShape::MultiShape(std::vector<Partition> diagrams) : diagrams_(std::move(diagrams)) {
  column_offsets_.assign(diagrams_.size(), 0);
  int offset = 0;
  for (std::size_t k = diagrams_.size(); k-- > 0;) {
    column_offsets_[k] = offset;
    offset += diagrams_[k].width();
  }
  total_columns_ = offset;
}

const Partition& MultiShape::diagram(int i) const {
  if (i < 1 || i > count()) throw std::out_of_range("diagram index out of range: " + std::to_string(i));
  return diagrams_[static_cast<std::size_t>(i - 1)];
}

int MultiShape::total_boxes() const {
  int total = 0;
  for (const auto& d : diagrams_) total += d.size();
  return total;
}

int MultiShape::column_offset(int i) const {
  if (i < 1 || i > count()) throw std::out_of_range("diagram index out of range: " + std::to_string(i));
  return column_offsets_[static_cast<std::size_t>(i - 1)];
}

int MultiShape::row_offset(int i) const {
  if (i < 1 || i > count()) throw std::out_of_range("diagram index out of range: " + std::to_string(i));
  int rows = 0;
  for (int k = 1; k < i; ++k) rows += diagram(k).length();
  return rows;
}

std::pair<int, int> MultiShape::locate_column(int global_column) const {
  for (int i = 1; i <= count(); ++i) {
    int local = global_column - column_offset(i);
    if (local >= 1 && local <= diagram(i).width()) return {i, local};
  }
  throw std::out_of_range("global column out of range: " + std::to_string(global_column));
}

bool MultiShape::fits(int n) const {
  return std::all_of(diagrams_.begin(), diagrams_.end(), [n](const Partition& p) { return p.fits(n); });
}

std::string MultiShape::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < diagrams_.size(); ++k) {
    if (k) s += ',';
    s += diagrams_[k].to_string();
  }
  return s + ")";
}

nlohmann::json MultiShape::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : diagrams_) out.push_back(d.to_json());
  return out;
}

MultiShape MultiShape::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("shape must be a JSON array of partitions");
  std::vector<Partition> diagrams;
  for (const auto& d : j) diagrams.push_back(Partition::from_json(d));
  return MultiShape(std::move(diagrams));
}

// ---------------------------------------------------------------------------
// CellLayout

CellLayout::CellLayout(MultiShape shape, int n, int first_column, int last_column)
    : shape_(std::move(shape)), n_(n), first_column_(first_column), last_column_(last_column) {
  if (n_ < 1) throw std::invalid_argument("alphabet size n must be at least 1");
  if (!shape_.fits(n_)) {
    throw std::invalid_argument("shape " + shape_.to_string() + " has a diagram with more than n = " +
                                std::to_string(n_) + " rows");
  }
  if (first_column_ < 1 || last_column_ > shape_.total_columns() || first_column_ > last_column_ + 1) {
    throw std::out_of_range("column window out of range");
  }
  row_start_.resize(static_cast<std::size_t>(shape_.count()));
  columns_.resize(static_cast<std::size_t>(shape_.total_columns()) + 1);
  for (int i = 1; i <= shape_.count(); ++i) {
    const Partition& p = shape_.diagram(i);
    const int offset = shape_.column_offset(i);
    auto& starts = row_start_[static_cast<std::size_t>(i - 1)];
    for (int r = 1; r <= p.length(); ++r) {
      int lo = std::max(1, first_column_ - offset);
      int hi = std::min(p[r], last_column_ - offset);
      starts.emplace_back(cells_.size(), lo);
      for (int c = lo; c <= hi; ++c) {
        columns_[static_cast<std::size_t>(offset + c)].push_back(cells_.size());
        cells_.push_back({i, r, c});
      }
    }
  }
}

std::optional<std::size_t> CellLayout::index_of(const Cell& c) const {
  if (c.diagram < 1 || c.diagram > shape_.count()) return std::nullopt;
  const Partition& p = shape_.diagram(c.diagram);
  if (c.row < 1 || c.row > p.length() || c.col < 1 || c.col > p[c.row]) return std::nullopt;
  const int global = shape_.column_offset(c.diagram) + c.col;
  if (global < first_column_ || global > last_column_) return std::nullopt;
  const auto& [start, lo] = row_start_[static_cast<std::size_t>(c.diagram - 1)][static_cast<std::size_t>(c.row - 1)];
  return start + static_cast<std::size_t>(c.col - lo);
}

const std::vector<std::size_t>& CellLayout::column(int global_column) const {
  if (global_column < 1 || global_column > shape_.total_columns()) {
    throw std::out_of_range("global column out of range");
  }
  return columns_[static_cast<std::size_t>(global_column)];
}

// ---------------------------------------------------------------------------
// BarredSkewTableau

BarredSkewTableau::BarredSkewTableau(MultiShape shape, int n, std::vector<BarredEntry> entries) {
  int total = shape.total_columns();
  *this = BarredSkewTableau(std::make_shared<const CellLayout>(std::move(shape), n, 1, total),
                            std::move(entries));
}

BarredSkewTableau::BarredSkewTableau(std::shared_ptr<const CellLayout> layout,
                                     std::vector<BarredEntry> entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  if (auto why = validate(); !why.empty()) throw std::invalid_argument("invalid barred tableau: " + why);
}

BarredSkewTableau BarredSkewTableau::trusted(std::shared_ptr<const CellLayout> layout,
                                             std::vector<BarredEntry> entries) {
  BarredSkewTableau t;
  t.layout_ = std::move(layout);
  t.entries_ = std::move(entries);
  return t;
}

bool BarredSkewTableau::is_full() const {
  return layout_->first_column() == 1 && layout_->last_column() == shape().total_columns();
}

const BarredEntry& BarredSkewTableau::at(const Cell& c) const {
  auto idx = layout_->index_of(c);
  if (!idx) throw std::out_of_range("cell not in tableau");
  return entries_[*idx];
}

BarredSkewTableau BarredSkewTableau::with_entries(std::vector<BarredEntry> entries) const {
  return BarredSkewTableau(layout_, std::move(entries));
}

std::string BarredSkewTableau::validate() const {
  const auto& cells = layout_->cells();
  if (entries_.size() != cells.size()) {
    return "expected " + std::to_string(cells.size()) + " entries, got " + std::to_string(entries_.size());
  }
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    const BarredEntry& e = entries_[k];
    const std::string where = "diagram " + std::to_string(c.diagram) + " row " + std::to_string(c.row) +
                              " column " + std::to_string(c.col);
    if (e.value < 1 || e.value > n()) return "value out of range at " + where;
    if (auto left = layout_->index_of({c.diagram, c.row, c.col - 1})) {
      if (entries_[*left].value > e.value) return "row decreases at " + where;
    }
    if (auto above = layout_->index_of({c.diagram, c.row - 1, c.col})) {
      if (entries_[*above].value >= e.value) return "column does not strictly increase at " + where;
    }
  }
  return {};
}

bool BarredSkewTableau::has_bars() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const BarredEntry& e) { return e.barred; });
}

nlohmann::json BarredSkewTableau::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  const auto& layout_cells = layout_->cells();
  for (std::size_t k = 0; k < layout_cells.size(); ++k) {
    const Cell& c = layout_cells[k];
    cells.push_back({{"d", c.diagram}, {"r", c.row}, {"c", c.col}, {"v", entries_[k].value},
                     {"b", entries_[k].barred}});
  }
  return {{"shape", shape().to_json()}, {"cells", std::move(cells)}};
}

BarredSkewTableau BarredSkewTableau::from_json(const nlohmann::json& j, int n) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("cells") || !j["cells"].is_array()) {
    throw std::invalid_argument("tableau JSON must be {shape: [...], cells: [...]}");
  }
  MultiShape shape = MultiShape::from_json(j["shape"]);
  const int total = shape.total_columns();
  auto layout = std::make_shared<const CellLayout>(std::move(shape), n, 1, total);
  std::vector<BarredEntry> entries(layout->cells().size());
  std::vector<bool> seen(entries.size(), false);
  for (const auto& cj : j["cells"]) {
    auto get_int = [&](const char* key) {
      if (!cj.contains(key) || !cj[key].is_number_integer()) {
        throw std::invalid_argument(std::string("tableau cell missing integer field '") + key + "'");
      }
      return cj[key].get<int>();
    };
    Cell c{get_int("d"), get_int("r"), get_int("c")};
    auto idx = layout->index_of(c);
    if (!idx) throw std::invalid_argument("tableau cell outside the shape");
    if (seen[*idx]) throw std::invalid_argument("tableau cell listed twice");
    seen[*idx] = true;
    bool barred = false;
    if (cj.contains("b")) {
      if (!cj["b"].is_boolean()) throw std::invalid_argument("tableau cell field 'b' must be boolean");
      barred = cj["b"].get<bool>();
    }
    entries[*idx] = {get_int("v"), barred};
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("tableau JSON does not fill every box of the shape");
  }
  return BarredSkewTableau(std::move(layout), std::move(entries));
}

std::string BarredSkewTableau::render() const {
  const MultiShape& s = shape();
  int total_rows = 0;
  for (const auto& d : s.diagrams()) total_rows += d.length();
  const int width = static_cast<int>(std::to_string(n()).size()) + 2;
  std::vector<std::string> grid(static_cast<std::size_t>(total_rows),
                                std::string(static_cast<std::size_t>(s.total_columns() * width), ' '));
  const auto& cells = layout_->cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    std::string text = std::to_string(entries_[k].value) + (entries_[k].barred ? "~" : "");
    auto row = static_cast<std::size_t>(s.row_offset(c.diagram) + c.row - 1);
    auto col = static_cast<std::size_t>((s.column_offset(c.diagram) + c.col - 1) * width);
    grid[row].replace(col, text.size(), text);
  }
  std::string out;
  for (auto& line : grid) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Statistics

std::vector<int> column_word(const BarredSkewTableau& t) {
  std::vector<int> word;
  const CellLayout& layout = t.layout();
  for (int col = layout.last_column(); col >= layout.first_column(); --col) {
    for (std::size_t idx : layout.column(col)) {
      const BarredEntry& e = t.entries()[idx];
      if (!e.barred) word.push_back(e.value);
    }
  }
  return word;
}

bool is_yamanouchi(std::span<const int> word) {
  std::vector<int> counts;
  for (int v : word) {
    if (v < 1) return false;
    if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
    int& c = counts[static_cast<std::size_t>(v - 1)];
    ++c;
    if (v > 1 && c > counts[static_cast<std::size_t>(v - 2)]) return false;
  }
  return true;
}

ContentVector unbarred_content(const BarredSkewTableau& t) {
  ContentVector counts(static_cast<std::size_t>(t.n()), 0);
  for (const auto& e : t.entries()) {
    if (!e.barred) ++counts[static_cast<std::size_t>(e.value - 1)];
  }
  return counts;
}

Monomial weight_monomial(const BarredSkewTableau& t) {
  std::vector<Monomial::Factor> factors;
  const auto cells = t.cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const BarredEntry& e = t.entries()[k];
    if (!e.barred) continue;
    const Cell& c = cells[k];
    factors.emplace_back(VarId::y(c.diagram, e.value + c.col - c.row), 1u);
  }
  return Monomial(std::move(factors));
}

Polynomial weight(const BarredSkewTableau& t) { return Polynomial::term(weight_monomial(t)); }

// ---------------------------------------------------------------------------
// Enumeration

std::vector<std::vector<BarredEntry>> diagram_fillings(const Partition& lambda, int n, bool allow_bars) {
  std::vector<std::vector<BarredEntry>> out;
  const int rows = lambda.length();
  if (rows > n) return out;
  std::vector<Cell> cells;
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= lambda[r]; ++c) cells.push_back({1, r, c});
  }
  // Row-major index of (r, c).
  std::vector<int> row_start(static_cast<std::size_t>(rows) + 1, 0);
  for (int r = 1; r < rows; ++r) row_start[static_cast<std::size_t>(r)] = row_start[r - 1] + lambda[r];
  const Partition conj = lambda.conjugate();
  std::vector<BarredEntry> current(cells.size());
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back(current);
      return;
    }
    const Cell& c = cells[k];
    int low = 1;
    if (c.col > 1) low = std::max(low, current[k - 1].value);
    if (c.row > 1) {
      low = std::max(low, current[static_cast<std::size_t>(row_start[c.row - 2] + c.col - 1)].value + 1);
    }
    // Each row below still needs a strictly larger value in this column.
    const int high = n - (conj[c.col] - c.row);
    for (int v = low; v <= high; ++v) {
      current[k] = {v, false};
      fill(k + 1);
      if (allow_bars) {
        current[k] = {v, true};
        fill(k + 1);
      }
    }
  };
  fill(0);
  return out;
}

namespace {

void cross_product(const MultiShape& shape, int n, bool allow_bars, const TableauVisitor& visit) {
  const int total = shape.total_columns();
  auto layout = std::make_shared<const CellLayout>(shape, n, 1, total);
  std::vector<std::vector<std::vector<BarredEntry>>> per_diagram;
  for (const auto& d : shape.diagrams()) {
    per_diagram.push_back(diagram_fillings(d, n, allow_bars));
    if (per_diagram.back().empty()) return;
  }
  const std::size_t r = per_diagram.size();
  std::vector<std::size_t> odometer(r, 0);
  std::vector<BarredEntry> entries;
  entries.reserve(layout->cells().size());
  while (true) {
    entries.clear();
    for (std::size_t i = 0; i < r; ++i) {
      const auto& f = per_diagram[i][odometer[i]];
      entries.insert(entries.end(), f.begin(), f.end());
    }
    visit(BarredSkewTableau::trusted(layout, entries));
    std::size_t k = r;
    while (k > 0) {
      --k;
      if (++odometer[k] < per_diagram[k].size()) break;
      odometer[k] = 0;
      if (k == 0) return;
    }
    if (r == 0) return;
  }
}

}  // namespace

void enumerate_barred(const MultiShape& shape, int n, const TableauVisitor& visit) {
  cross_product(shape, n, true, visit);
}

std::vector<BarredSkewTableau> enumerate_barred(const MultiShape& shape, int n) {
  std::vector<BarredSkewTableau> out;
  enumerate_barred(shape, n, [&](const BarredSkewTableau& t) { out.push_back(t); });
  return out;
}

void enumerate_semistandard(const Partition& lambda, int n, const TableauVisitor& visit) {
  cross_product(MultiShape{lambda}, n, false, visit);
}

std::vector<BarredSkewTableau> enumerate_semistandard(const Partition& lambda, int n) {
  std::vector<BarredSkewTableau> out;
  enumerate_semistandard(lambda, n, [&](const BarredSkewTableau& t) { out.push_back(t); });
  return out;
}

std::vector<MultiShape> multishapes_up_to(int r, int n, int max_boxes) {
  std::vector<MultiShape> out;
  std::vector<Partition> current;
  std::function<void(int)> grow = [&](int remaining) {
    if (static_cast<int>(current.size()) == r) {
      out.emplace_back(current);
      return;
    }
    for (const auto& p : partitions_in_box(n, remaining, remaining)) {
      current.push_back(p);
      grow(remaining - p.size());
      current.pop_back();
    }
  };
  grow(max_boxes);
  return out;
}

}  // namespace fslr
