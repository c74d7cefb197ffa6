#pragma once

// The involutions s_1..s_{n-1} on barred skew tableaux and the sign-reversing
// pairing of non-Yamanouchi tableaux built from them.

#include "fslr/tableau.hpp"

#include <optional>
#include <span>
#include <utility>

namespace fslr {

/// Status of an entry of value i or i+1 with respect to s_i.
enum class EntryKind {
  Free,      // no entry of the other value in its column
  SemiFree,  // partner present, exactly one of the two barred
  Locked,    // partner present, both barred or both unbarred
};

/// Throws std::invalid_argument when the cell's value is not i or i+1.
EntryKind classify_entry(const BarredSkewTableau& t, const Cell& cell, int i);

/// s_i T.  Semi-free pairs pass their bar to the other member; every maximal
/// row run of free entries is rebalanced so that its unbarred i's and
/// (i+1)'s trade counts, with each moved bar shifted one column so the cell
/// weight value + column - row is unchanged.  Requires 1 <= i <= n-1.
BarredSkewTableau bender_knuth(const BarredSkewTableau& t, int i);

/// s_{w_1} s_{w_2} ... s_{w_k} T: the word is a product of simple
/// transpositions acting on T as operators, so s_{w_k} is applied first.
BarredSkewTableau apply_permutation(const BarredSkewTableau& t, std::span<const int> word);

/// sigma . xi for sigma = s_{w_1} ... s_{w_k}, 1-based transposition indices.
std::vector<int> permute_vector(std::vector<int> xi, std::span<const int> word);

/// (T_{<j}, T_{>=j}) for a global column j with first <= j <= last + 1.
std::pair<BarredSkewTableau, BarredSkewTableau> split_columns(const BarredSkewTableau& t, int j);
/// Inverse of split_columns: glues two tableaux on adjacent column windows.
BarredSkewTableau join_columns(const BarredSkewTableau& left, const BarredSkewTableau& right);

struct BadGuySelection {
  int column;  // maximal j with omega(T_{>=j}) not a partition
  int index;   // minimal i with omega(T_{>=j})_i < omega(T_{>=j})_{i+1}
  friend bool operator==(const BadGuySelection&, const BadGuySelection&) = default;
};

/// nullopt iff the unbarred column word is Yamanouchi.
std::optional<BadGuySelection> bad_guy_selection(const BarredSkewTableau& t);

/// T* = T with T_{<j} replaced by s_i(T_{<j}), or nullopt for Yamanouchi T.
std::optional<BarredSkewTableau> bad_guy_pair(const BarredSkewTableau& t);

}  // namespace fslr
