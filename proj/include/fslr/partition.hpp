#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace fslr {

/// Weakly decreasing sequence of nonnegative integers.  Trailing zeros are
/// accepted on input and dropped, so (2,1) and (2,1,0) compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Largest part, i.e. the number of columns of the diagram.
  int width() const { return parts_.empty() ? 0 : parts_.front(); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// k-th part, 1-based, zero past the end.
  int operator[](int k) const;
  /// Parts padded with zeros (or validated) to exactly n entries.
  std::vector<int> padded(int n) const;
  Partition conjugate() const;
  bool contains(const Partition& other) const;
  /// True when the partition has at most n nonzero parts.
  bool fits(int n) const { return length() <= n; }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Partition from_json(const nlohmann::json& j);

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Descending lexicographic order, used for all sorted output.
struct PartitionDescending {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// True iff `v` is a weakly decreasing sequence of nonnegative integers.
bool is_partition(std::span<const int> v);

/// All partitions with at most `max_length` parts, largest part at most
/// `max_part`, and size at most `max_size`, in descending lexicographic order.
std::vector<Partition> partitions_in_box(int max_length, int max_part, int max_size);

/// All partitions of exactly `size` with at most `max_length` parts.
std::vector<Partition> partitions_of(int size, int max_length);

}  // namespace fslr
