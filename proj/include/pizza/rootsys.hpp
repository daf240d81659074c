#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pizza/poly.hpp"

namespace pizza {

enum class Family { A, D, A1k, I2 };

std::string_view family_name(Family f);

/// A Coxeter arrangement from the supported catalog.
///
/// Type A_n lives in n+1 coordinates with the hyperplane sum(a) = 0 as its
/// space; D_n in R^n; A1k is k coordinate hyperplanes in R^ambient; I2(m) is
/// the dihedral arrangement of m lines in the plane and is only available to
/// the numeric oracles.
struct ArrangementSpec {
  Family family = Family::A;
  int rank = 1;
  int ambient_dim = 2;
  int positive_root_count = 1;

  static ArrangementSpec type_a(int n);
  static ArrangementSpec type_d(int n);
  static ArrangementSpec a1k(int k, int ambient);
  static ArrangementSpec i2(int m);
  /// "A:6", "D:5", "A1k:3@7", "I2:5".
  static ArrangementSpec parse(std::string_view text);

  /// Dimension of the space the arrangement lives in (n for A_n).
  int dimension() const;
  bool numeric_only() const { return family == Family::I2; }
  /// Rank of the A_1^k type of the 2-structures (A, D only).
  int two_structure_rank() const;
  /// Size of the ground set of the indexing matchings (A, D only).
  int matching_ground_size() const;
  std::string to_string() const;

  friend bool operator==(const ArrangementSpec&, const ArrangementSpec&) = default;
};

/// Positive root with integer coordinates. The unit pseudo-root is
/// coords / sqrt(norm_squared).
struct Root {
  std::vector<int> coords;
  int norm_squared = 1;

  long dot(const Root& other) const;
  double pairing(std::span<const double> point) const;
  /// <coords, a> as a linear form in ambient variables.
  Poly linear_form() const;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Standard positive system: lexicographic in (i, j), minus before plus for D.
std::vector<Root> positive_roots(const ArrangementSpec& spec);

/// prod over positive roots of <coords, a>; equals 2^{|Phi+|/2} J(a).
Poly jacobian_unnormalized(const ArrangementSpec& spec);

/// Unit pseudo-roots as floating-point vectors (any family).
std::vector<std::vector<double>> numeric_roots(const ArrangementSpec& spec);

/// (-1)^{#positive roots with negative pairing}. Throws OnHyperplane when a
/// pairing vanishes (exactly for integer roots, within 1e-12 for I2).
int chamber_sign(const ArrangementSpec& spec, std::span<const double> point);

/// Reflection of `alpha` in the hyperplane orthogonal to `beta`, for integer
/// roots of equal norm.
Root reflect(const Root& alpha, const Root& beta);

}  // namespace pizza
