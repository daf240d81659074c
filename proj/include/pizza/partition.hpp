#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pizza {

/// Integer partition; trailing zero parts are stripped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  /// |lambda|.
  int weight() const;
  /// lambda_i, zero past the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of `total` with at most `max_parts` parts, in reverse
/// lexicographic order ((total) first).
std::vector<Partition> partitions(int total, std::size_t max_parts);

}  // namespace pizza
