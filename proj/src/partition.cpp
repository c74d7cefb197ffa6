#include "fslr/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fslr {

bool is_partition(std::span<const int> v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) return false;
    if (k + 1 < v.size() && v[k] < v[k + 1]) return false;
  }
  return true;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition(parts_)) {
    std::string text = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) text += (k ? "," : "") + std::to_string(parts_[k]);
    throw std::invalid_argument("not a partition: " + text + "]");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int k) const {
  if (k < 1) throw std::out_of_range("partition parts are 1-based");
  return k <= length() ? parts_[static_cast<std::size_t>(k - 1)] : 0;
}

std::vector<int> Partition::padded(int n) const {
  if (length() > n) {
    throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(n) +
                                " parts");
  }
  std::vector<int> v = parts_;
  v.resize(static_cast<std::size_t>(n), 0);
  return v;
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<std::size_t>(width()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int k = 1; k <= other.length(); ++k) {
    if (other[k] > (*this)[k]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

nlohmann::json Partition::to_json() const { return parts_; }

Partition Partition::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array of integers");
  std::vector<int> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("partition must be a JSON array of integers");
    v.push_back(e.get<int>());
  }
  return Partition(std::move(v));
}

std::vector<Partition> partitions_in_box(int max_length, int max_part, int max_size) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> grow = [&](int bound, int remaining) {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) == max_length) return;
    for (int part = std::min(bound, remaining); part >= 1; --part) {
      current.push_back(part);
      grow(part, remaining - part);
      current.pop_back();
    }
  };
  if (max_length < 0 || max_part < 0 || max_size < 0) return out;
  grow(max_part, max_size);
  std::sort(out.begin(), out.end(), PartitionDescending{});
  return out;
}

std::vector<Partition> partitions_of(int size, int max_length) {
  std::vector<Partition> out;
  for (auto& p : partitions_in_box(max_length, size, size)) {
    if (p.size() == size) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace fslr
