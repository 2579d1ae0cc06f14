#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace w22 {

/// Non-decreasing finite integer sequence. The empty partition is 0-bar.
/// Zero parts are legal and stored explicitly.
class Partition {
 public:
  Partition() = default;
  /// Parts are sorted on construction.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }

  /// Number of times k appears.
  int multiplicity(int k) const;
  /// Number of parts.
  std::size_t length() const { return parts_.size(); }
  /// Sum of the parts.
  int weight() const;

  bool all_nonpositive() const;
  bool all_positive() const;

  /// (parts_1, ..., parts_i); i in [0, length].
  Partition prefix(std::size_t i) const;
  /// (parts_{j+1}, ..., parts_r); j in [0, length].
  Partition suffix(std::size_t j) const;
  /// Copy with the i-th part (1-based) removed; i in [1, length].
  Partition without(std::size_t i) const;
  /// Copy with k inserted.
  Partition with(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Canonical order: length ascending, weight descending, then parts
/// lexicographically descending. Total on partitions.
bool canonical_less(const Partition& a, const Partition& b);

struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

/// "(-2,-1,0)" and "()" for 0-bar.
std::string to_string(const Partition& p);

/// All partitions with parts <= 0, weight >= -max_degree and at most
/// max_length parts, in canonical order.
std::vector<Partition> enumerate_nonpositive(int max_degree, int max_length);

std::size_t hash_value(const Partition& p);

}  // namespace w22
