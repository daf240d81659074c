#include "pizza/matchings.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>

#include "pizza/error.hpp"
#include "pizza/parallel.hpp"

namespace pizza {

namespace {

class Enumerator {
 public:
  Enumerator(int r, const MatchingVisitor& visit) : r_(r), visit_(visit), used_(r + 1, false) {
    current_.ground_size = r;
  }

  void run() { recurse(r_); }

  // Applies the first vertex's `branch`-th decision, then recurses.
  void run_branch(int branch) {
    const bool can_isolate = r_ % 2 == 1;
    if (can_isolate && branch == 0) {
      isolate(1, r_);
      return;
    }
    const int partner = 2 + branch - (can_isolate ? 1 : 0);
    if (partner > r_) throw Error("matching branch index out of range");
    pair(1, partner, r_);
  }

 private:
  void recurse(int remaining) {
    if (remaining == 0) {
      visit_(current_);
      return;
    }
    int v = 1;
    while (used_[v]) ++v;
    if (remaining % 2 == 1 && !current_.isolated) isolate(v, remaining);
    for (int w = v + 1; w <= r_; ++w)
      if (!used_[w]) pair(v, w, remaining);
  }

  void isolate(int v, int remaining) {
    used_[v] = true;
    current_.isolated = v;
    recurse(remaining - 1);
    current_.isolated.reset();
    used_[v] = false;
  }

  void pair(int v, int w, int remaining) {
    used_[v] = used_[w] = true;
    current_.edges.emplace_back(v, w);
    recurse(remaining - 2);
    current_.edges.pop_back();
    used_[v] = used_[w] = false;
  }

  int r_;
  const MatchingVisitor& visit_;
  std::vector<bool> used_;
  Matching current_;
};

void require_ground(int r) {
  if (r < 1) throw Error("matchings require a ground set of size >= 1");
}

}  // namespace

std::string Matching::to_string() const {
  std::string s;
  for (const auto& [i, j] : edges) s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (isolated) s += ";iso=" + std::to_string(*isolated);
  s += matching_sign(*this) > 0 ? ";sign=+1" : ";sign=-1";
  return s;
}

bool Matching::is_valid() const {
  std::vector<int> seen(static_cast<std::size_t>(ground_size) + 1, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    if (i < 1 || j > ground_size || i >= j) return false;
    if (e > 0 && edges[e - 1].first >= i) return false;
    ++seen[static_cast<std::size_t>(i)];
    ++seen[static_cast<std::size_t>(j)];
  }
  if (isolated) {
    if (*isolated < 1 || *isolated > ground_size) return false;
    ++seen[static_cast<std::size_t>(*isolated)];
  }
  if (isolated.has_value() != (ground_size % 2 == 1)) return false;
  return std::all_of(seen.begin() + 1, seen.end(), [](int c) { return c == 1; });
}

std::uint64_t matching_count(int r) {
  require_ground(r);
  std::uint64_t c = 1;
  for (int f = (r % 2 == 1) ? r : r - 1; f > 1; f -= 2) c *= static_cast<std::uint64_t>(f);
  return c;
}

void enumerate_matchings(int r, const MatchingVisitor& visit) {
  require_ground(r);
  Enumerator(r, visit).run();
}

int matching_branch_count(int r) {
  require_ground(r);
  return (r - 1) + (r % 2);
}

void enumerate_matching_branch(int r, int branch, const MatchingVisitor& visit) {
  require_ground(r);
  if (branch < 0 || branch >= matching_branch_count(r)) throw Error("matching branch index out of range");
  Enumerator(r, visit).run_branch(branch);
}

int crossings(const Matching& m) {
  int count = 0;
  for (std::size_t x = 0; x < m.edges.size(); ++x)
    for (std::size_t y = 0; y < m.edges.size(); ++y) {
      const auto [a, b] = m.edges[x];
      const auto [c, d] = m.edges[y];
      if (a < c && c < b && b < d) ++count;
    }
  return count;
}

int matching_sign(const Matching& m) {
  int exponent = crossings(m);
  if (m.ground_size % 2 == 1) {
    if (!m.isolated) throw Error("odd matching without an isolated vertex");
    exponent += *m.isolated - 1;
  }
  return exponent % 2 == 0 ? 1 : -1;
}

long sign_sum(int r, int threads) {
  const int branches = matching_branch_count(r);
  std::vector<long> partial(static_cast<std::size_t>(branches), 0);
  parallel_tasks(static_cast<std::size_t>(branches), threads, [&](std::size_t b, std::size_t) {
    long s = 0;
    enumerate_matching_branch(r, static_cast<int>(b), [&](const Matching& m) { s += matching_sign(m); });
    partial[b] = s;
  });
  long total = 0;
  for (long s : partial) total += s;
  return total;
}

TwoStructure two_structure(const ArrangementSpec& spec, const Matching& m) {
  const int ground = spec.matching_ground_size();
  if (m.ground_size != ground)
    throw Error("two_structure: matching on " + std::to_string(m.ground_size) + " vertices, " +
                spec.to_string() + " needs " + std::to_string(ground));
  TwoStructure out{m, {}};
  const auto dim = static_cast<std::size_t>(spec.ambient_dim);
  for (const auto& [i, j] : m.edges) {
    Root minus{std::vector<int>(dim, 0), 2};
    minus.coords[static_cast<std::size_t>(i - 1)] = 1;
    minus.coords[static_cast<std::size_t>(j - 1)] = -1;
    out.positive_roots.push_back(minus);
    if (spec.family == Family::D) {
      Root plus = minus;
      plus.coords[static_cast<std::size_t>(j - 1)] = 1;
      out.positive_roots.push_back(std::move(plus));
    }
  }
  return out;
}

}  // namespace pizza
