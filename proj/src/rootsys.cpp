#include "pizza/rootsys.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "pizza/error.hpp"

namespace pizza {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::A1k: return "A1k";
    case Family::I2: return "I2";
  }
  return "?";
}

ArrangementSpec ArrangementSpec::type_a(int n) {
  if (n < 1) throw Error("type A requires rank >= 1");
  if (n + 1 > static_cast<int>(kMaxArity)) throw ResourceLimit("type A rank too large");
  return {Family::A, n, n + 1, n * (n + 1) / 2};
}

ArrangementSpec ArrangementSpec::type_d(int n) {
  if (n < 3) throw Error("type D requires rank >= 3");
  if (n > static_cast<int>(kMaxArity)) throw ResourceLimit("type D rank too large");
  return {Family::D, n, n, n * (n - 1)};
}

ArrangementSpec ArrangementSpec::a1k(int k, int ambient) {
  if (k < 1 || ambient < k) throw Error("A1k requires 1 <= k <= ambient dimension");
  if (ambient > static_cast<int>(kMaxArity)) throw ResourceLimit("A1k ambient dimension too large");
  return {Family::A1k, k, ambient, k};
}

ArrangementSpec ArrangementSpec::i2(int m) {
  if (m < 1) throw Error("I2 requires m >= 1");
  return {Family::I2, m, 2, m};
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("malformed arrangement spec '" + std::string(whole) + "'");
  return v;
}

}  // namespace

ArrangementSpec ArrangementSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("arrangement spec '" + std::string(text) + "' lacks ':'");
  const std::string_view fam = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (fam == "A") return type_a(parse_int(rest, text));
  if (fam == "D") return type_d(parse_int(rest, text));
  if (fam == "I2") return i2(parse_int(rest, text));
  if (fam == "A1k") {
    const auto at = rest.find('@');
    if (at == std::string_view::npos) {
      const int k = parse_int(rest, text);
      return a1k(k, k);
    }
    return a1k(parse_int(rest.substr(0, at), text), parse_int(rest.substr(at + 1), text));
  }
  throw ParseError("unknown arrangement family '" + std::string(fam) + "'");
}

int ArrangementSpec::dimension() const {
  switch (family) {
    case Family::A: return rank;
    case Family::D: return rank;
    case Family::A1k: return ambient_dim;
    case Family::I2: return 2;
  }
  return 0;
}

int ArrangementSpec::two_structure_rank() const {
  switch (family) {
    case Family::A: return (rank + 1) / 2;
    case Family::D: return 2 * (rank / 2);
    default: throw UnsupportedFamily("2-structures are only catalogued for types A and D");
  }
}

int ArrangementSpec::matching_ground_size() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::D: return rank;
    default: throw UnsupportedFamily("matchings index 2-structures only for types A and D");
  }
}

std::string ArrangementSpec::to_string() const {
  std::string s = std::string(family_name(family)) + ":" + std::to_string(rank);
  if (family == Family::A1k && ambient_dim != rank) s += "@" + std::to_string(ambient_dim);
  return s;
}

long Root::dot(const Root& other) const {
  if (coords.size() != other.coords.size()) throw ArityMismatch("root dimension mismatch");
  long s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) s += static_cast<long>(coords[i]) * other.coords[i];
  return s;
}

double Root::pairing(std::span<const double> point) const {
  if (point.size() != coords.size()) throw ArityMismatch("point dimension differs from root");
  double s = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) s += coords[i] * point[i];
  return s;
}

Poly Root::linear_form() const { return Poly::linear_form(coords); }

std::vector<Root> positive_roots(const ArrangementSpec& spec) {
  const int dim = spec.ambient_dim;
  std::vector<Root> roots;
  auto unit_pair = [dim](int i, int j, int sign_j) {
    Root r{std::vector<int>(static_cast<std::size_t>(dim), 0), 2};
    r.coords[static_cast<std::size_t>(i)] = 1;
    r.coords[static_cast<std::size_t>(j)] = sign_j;
    return r;
  };
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) roots.push_back(unit_pair(i, j, -1));
      break;
    case Family::D:
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          roots.push_back(unit_pair(i, j, -1));
          roots.push_back(unit_pair(i, j, +1));
        }
      break;
    case Family::A1k:
      for (int i = 0; i < spec.rank; ++i) {
        Root r{std::vector<int>(static_cast<std::size_t>(dim), 0), 1};
        r.coords[static_cast<std::size_t>(i)] = 1;
        roots.push_back(std::move(r));
      }
      break;
    case Family::I2:
      throw UnsupportedFamily("I2 roots are irrational; use numeric_roots");
  }
  return roots;
}

Poly jacobian_unnormalized(const ArrangementSpec& spec) {
  if (spec.family != Family::A && spec.family != Family::D)
    throw UnsupportedFamily("Jacobian is provided for types A and D");
  Poly j = Poly::constant(static_cast<std::size_t>(spec.ambient_dim), Rational(1));
  for (const Root& r : positive_roots(spec)) j = j * r.linear_form();
  return j;
}

std::vector<std::vector<double>> numeric_roots(const ArrangementSpec& spec) {
  std::vector<std::vector<double>> out;
  if (spec.family == Family::I2) {
    for (int j = 0; j < spec.rank; ++j) {
      const double angle = j * std::numbers::pi / spec.rank;
      out.push_back({std::cos(angle), std::sin(angle)});
    }
    return out;
  }
  for (const Root& r : positive_roots(spec)) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(r.norm_squared));
    std::vector<double> v(r.coords.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.coords[i] * scale;
    out.push_back(std::move(v));
  }
  return out;
}

int chamber_sign(const ArrangementSpec& spec, std::span<const double> point) {
  if (point.size() != static_cast<std::size_t>(spec.ambient_dim))
    throw ArityMismatch("chamber_sign: point has " + std::to_string(point.size()) +
                        " coordinates, expected " + std::to_string(spec.ambient_dim));
  int negatives = 0;
  if (spec.family == Family::I2) {
    for (const auto& root : numeric_roots(spec)) {
      const double p = root[0] * point[0] + root[1] * point[1];
      if (std::abs(p) <= 1e-12) throw OnHyperplane("point lies on a hyperplane of " + spec.to_string());
      if (p < 0) ++negatives;
    }
  } else {
    for (const Root& r : positive_roots(spec)) {
      const double p = r.pairing(point);
      if (p == 0.0) throw OnHyperplane("point lies on a hyperplane of " + spec.to_string());
      if (p < 0) ++negatives;
    }
  }
  return negatives % 2 == 0 ? 1 : -1;
}

Root reflect(const Root& alpha, const Root& beta) {
  const long twice = 2 * alpha.dot(beta);
  const long nb = beta.dot(beta);
  if (twice % nb != 0) throw Error("reflection leaves the integer lattice");
  const long c = twice / nb;
  Root out = alpha;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    out.coords[i] = static_cast<int>(alpha.coords[i] - c * beta.coords[i]);
  return out;
}

}  // namespace pizza
