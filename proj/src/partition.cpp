#include "pizza/partition.hpp"

#include <numeric>

#include "pizza/error.hpp"

namespace pizza {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  if (parts_.empty()) s += "0";
  return s + ")";
}

namespace {

void generate(int remaining, int cap, std::size_t slots, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int total, std::size_t max_parts) {
  if (total < 0) return {};
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(total, total, max_parts, prefix, out);
  return out;
}

}  // namespace pizza
