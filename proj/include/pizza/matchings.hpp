#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pizza/rootsys.hpp"

namespace pizza {

/// Maximal matching on {1..ground_size}. Edges are 1-based (i < j), sorted by
/// i; the isolated vertex is present iff ground_size is odd.
struct Matching {
  std::vector<std::pair<int, int>> edges;
  std::optional<int> isolated;
  int ground_size = 0;

  /// "(1,5)(3,8)(4,6)(7,9);iso=2;sign=+1"
  std::string to_string() const;
  bool is_valid() const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Positive roots of the 2-structure indexed by a matching: one root e_i - e_j
/// per edge in type A, the pair e_i - e_j, e_i + e_j per edge in type D.
struct TwoStructure {
  Matching source;
  std::vector<Root> positive_roots;
};

using MatchingVisitor = std::function<void(const Matching&)>;

/// r!! for odd r, (r-1)!! for even r.
std::uint64_t matching_count(int r);

/// Streams every maximal matching on {1..r} once, in the fixed order: the
/// smallest unused vertex is first isolated (when the remaining count is odd
/// and nothing is isolated yet), then matched with each larger unused vertex.
void enumerate_matchings(int r, const MatchingVisitor& visit);

/// The enumeration split at the first vertex's decision. Concatenating the
/// branches 0..branch_count-1 reproduces enumerate_matchings exactly.
int matching_branch_count(int r);
void enumerate_matching_branch(int r, int branch, const MatchingVisitor& visit);

int crossings(const Matching& m);
/// (-1)^cross for even ground sets, (-1)^{cross + p - 1} with isolated p.
int matching_sign(const Matching& m);
/// Sum of matching_sign over all maximal matchings on {1..r}.
long sign_sum(int r, int threads = 1);

TwoStructure two_structure(const ArrangementSpec& spec, const Matching& m);

}  // namespace pizza
