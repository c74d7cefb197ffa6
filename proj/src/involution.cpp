#include "fslr/involution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fslr {

namespace {

// Index of the same-column cell holding the other value of {i, i+1}.
std::optional<std::size_t> partner_of(const BarredSkewTableau& t, std::size_t k, int i) {
  const Cell& c = t.cells()[k];
  const int value = t.entries()[k].value;
  std::optional<std::size_t> other;
  int wanted = 0;
  if (value == i) {
    other = t.layout().index_of({c.diagram, c.row + 1, c.col});
    wanted = i + 1;
  } else if (value == i + 1) {
    other = t.layout().index_of({c.diagram, c.row - 1, c.col});
    wanted = i;
  } else {
    return std::nullopt;
  }
  if (other && t.entries()[*other].value == wanted) return other;
  return std::nullopt;
}

EntryKind classify_index(const BarredSkewTableau& t, std::size_t k, int i) {
  auto p = partner_of(t, k, i);
  if (!p) return EntryKind::Free;
  return t.entries()[k].barred != t.entries()[*p].barred ? EntryKind::SemiFree : EntryKind::Locked;
}

void check_index(const BarredSkewTableau& t, int i) {
  if (i < 1 || i > t.n() - 1) {
    throw std::out_of_range("transposition index " + std::to_string(i) + " outside 1.." +
                            std::to_string(t.n() - 1));
  }
}

// Rebalances one maximal run of free entries (left to right) in place.
void rebalance_free_run(std::vector<BarredEntry>& e, const std::vector<std::size_t>& run, int i) {
  int l = 0;
  int r = 0;
  for (std::size_t k : run) {
    if (!e[k].barred) (e[k].value == i ? l : r) += 1;
  }
  if (l == r) return;
  const auto len = static_cast<int>(run.size());
  auto at = [&](int pos) -> BarredEntry& { return e[run[static_cast<std::size_t>(pos)]]; };

  if (l < r) {
    // R runs from the first (i+1)-valued entry after the l-th unbarred i to
    // the (r-l)-th unbarred i+1.
    int start = 0;
    for (int seen = 0; start < len && seen < l; ++start) {
      if (!at(start).barred && at(start).value == i) ++seen;
    }
    while (start < len && at(start).value != i + 1) ++start;
    int end = start;
    for (int seen = 0; end < len; ++end) {
      if (!at(end).barred && at(end).value == i + 1 && ++seen == r - l) break;
    }
    for (int p = start; p <= end; ++p) at(p).value = i;
    for (int p = end; p >= start; --p) {
      if (at(p).barred) {
        at(p).barred = false;
        at(p + 1).barred = true;
      }
    }
  } else {
    // R runs from the (r+1)-th unbarred i to the last i-valued entry before
    // the first unbarred i+1.
    int start = 0;
    for (int seen = 0; start < len; ++start) {
      if (!at(start).barred && at(start).value == i && ++seen == r + 1) break;
    }
    int end = len - 1;
    for (int p = 0; p < len; ++p) {
      if (!at(p).barred && at(p).value == i + 1) {
        end = p - 1;
        break;
      }
    }
    while (end > start && at(end).value != i) --end;
    for (int p = start; p <= end; ++p) at(p).value = i + 1;
    for (int p = start; p <= end; ++p) {
      if (at(p).barred) {
        at(p).barred = false;
        at(p - 1).barred = true;
      }
    }
  }
}

}  // namespace

EntryKind classify_entry(const BarredSkewTableau& t, const Cell& cell, int i) {
  auto k = t.layout().index_of(cell);
  if (!k) throw std::out_of_range("cell not in tableau");
  const int v = t.entries()[*k].value;
  if (v != i && v != i + 1) {
    throw std::invalid_argument("entry value " + std::to_string(v) + " is neither " + std::to_string(i) +
                                " nor " + std::to_string(i + 1));
  }
  return classify_index(t, *k, i);
}

BarredSkewTableau bender_knuth(const BarredSkewTableau& t, int i) {
  check_index(t, i);
  const auto cells = t.cells();
  const auto& in = t.entries();
  std::vector<BarredEntry> out(in.begin(), in.end());

  std::vector<bool> is_free(cells.size(), false);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const int v = in[k].value;
    if (v != i && v != i + 1) continue;
    auto p = partner_of(t, k, i);
    if (!p) {
      is_free[k] = true;
    } else if (v == i && in[k].barred != in[*p].barred) {
      out[k].barred = in[*p].barred;
      out[*p].barred = in[k].barred;
    }
  }

  // Cells of a row are contiguous in the layout, in column order.
  std::vector<std::size_t> run;
  for (std::size_t k = 0; k <= cells.size(); ++k) {
    const bool continues = k < cells.size() && is_free[k] && !run.empty() &&
                           cells[run.back()].diagram == cells[k].diagram &&
                           cells[run.back()].row == cells[k].row;
    if (!continues && !run.empty()) {
      rebalance_free_run(out, run, i);
      run.clear();
    }
    if (k < cells.size() && is_free[k]) run.push_back(k);
  }
  return BarredSkewTableau::trusted(t.layout_ptr(), std::move(out));
}

BarredSkewTableau apply_permutation(const BarredSkewTableau& t, std::span<const int> word) {
  for (int i : word) check_index(t, i);
  BarredSkewTableau result = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) result = bender_knuth(result, *it);
  return result;
}

std::vector<int> permute_vector(std::vector<int> xi, std::span<const int> word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    if (i < 1 || static_cast<std::size_t>(i) >= xi.size()) throw std::out_of_range("transposition index");
    std::swap(xi[static_cast<std::size_t>(i - 1)], xi[static_cast<std::size_t>(i)]);
  }
  return xi;
}

namespace {

BarredSkewTableau restrict_to(const BarredSkewTableau& t, int first, int last) {
  auto layout = std::make_shared<const CellLayout>(t.shape(), t.n(), first, last);
  std::vector<BarredEntry> entries;
  entries.reserve(layout->cells().size());
  for (const Cell& c : layout->cells()) entries.push_back(t.at(c));
  return BarredSkewTableau::trusted(std::move(layout), std::move(entries));
}

}  // namespace

std::pair<BarredSkewTableau, BarredSkewTableau> split_columns(const BarredSkewTableau& t, int j) {
  const int first = t.layout().first_column();
  const int last = t.layout().last_column();
  if (j < first || j > last + 1) {
    throw std::out_of_range("split column " + std::to_string(j) + " outside " + std::to_string(first) +
                            ".." + std::to_string(last + 1));
  }
  return {restrict_to(t, first, j - 1), restrict_to(t, j, last)};
}

BarredSkewTableau join_columns(const BarredSkewTableau& left, const BarredSkewTableau& right) {
  if (!(left.shape() == right.shape()) || left.n() != right.n() ||
      left.layout().last_column() + 1 != right.layout().first_column()) {
    throw std::invalid_argument("join_columns needs adjacent windows of the same shape");
  }
  auto layout = std::make_shared<const CellLayout>(left.shape(), left.n(), left.layout().first_column(),
                                                   right.layout().last_column());
  std::vector<BarredEntry> entries;
  entries.reserve(layout->cells().size());
  const int boundary = right.layout().first_column();
  for (const Cell& c : layout->cells()) {
    const int global = left.shape().column_offset(c.diagram) + c.col;
    entries.push_back(global < boundary ? left.at(c) : right.at(c));
  }
  return BarredSkewTableau::trusted(std::move(layout), std::move(entries));
}

std::optional<BadGuySelection> bad_guy_selection(const BarredSkewTableau& t) {
  const CellLayout& layout = t.layout();
  std::vector<int> suffix(static_cast<std::size_t>(t.n()), 0);
  for (int j = layout.last_column(); j >= layout.first_column(); --j) {
    for (std::size_t k : layout.column(j)) {
      const BarredEntry& e = t.entries()[k];
      if (!e.barred) ++suffix[static_cast<std::size_t>(e.value - 1)];
    }
    for (std::size_t i = 0; i + 1 < suffix.size(); ++i) {
      if (suffix[i] < suffix[i + 1]) return BadGuySelection{j, static_cast<int>(i) + 1};
    }
  }
  return std::nullopt;
}

std::optional<BarredSkewTableau> bad_guy_pair(const BarredSkewTableau& t) {
  auto sel = bad_guy_selection(t);
  if (!sel) return std::nullopt;
  auto [left, right] = split_columns(t, sel->column);
  return join_columns(bender_knuth(left, sel->index), right);
}

}  // namespace fslr
