#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pizza/monomial.hpp"
#include "pizza/rational.hpp"

namespace pizza {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals with a fixed number of
/// variables. Terms are kept sorted in descending graded-lex order with no
/// zero coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  explicit Poly(std::size_t arity = 1);

  static Poly constant(std::size_t arity, const Rational& c);
  static Poly variable(std::size_t arity, std::size_t index);
  /// sum_i coeffs[i] * x_i, arity = coeffs.size().
  static Poly linear_form(std::span<const int> coeffs);
  /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  static Poly from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly scaled(const Rational& c) const;
  Poly pow(unsigned exponent) const;

  /// x_i -> x_{perm[i]} for every variable.
  Poly permuted(std::span<const std::size_t> perm) const;
  Poly swapped(std::size_t i, std::size_t j) const;
  /// x_i -> -x_i.
  Poly with_negated_variable(std::size_t i) const;
  /// Same polynomial viewed with a different arity. Shrinking requires the
  /// dropped variables not to occur.
  Poly with_arity(std::size_t arity) const;

  double evaluate(std::span<const double> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Canonical text: descending graded-lex terms, coefficients as num/den,
  /// variables named prefix1..prefixN.
  std::string to_string(const std::string& prefix = "a") const;

 private:
  std::size_t arity_;
  std::vector<Term> terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

/// Replaces x_{var_index} by the affine form `form` (degree <= 1).
Poly substitute_linear(const Poly& p, std::size_t var_index, const Poly& form);

/// q with q * form == p, for a nonzero homogeneous linear form. Throws
/// NonDivisible when a remainder would be left.
Poly exact_divide_linear(const Poly& p, const Poly& form);

/// prod_{i<j in vars} (x_i - x_j), times prod (x_i + x_j) when squared.
Poly vandermonde(std::size_t arity, std::span<const std::size_t> vars, bool squared);

/// Iterated exact_divide_linear over the Vandermonde factors on `vars`.
Poly divide_by_vandermonde(const Poly& p, std::span<const std::size_t> vars, bool squared);

/// True iff swapping x_i and x_j maps p to -p.
bool is_skew_under_transposition(const Poly& p, std::size_t i, std::size_t j);

}  // namespace pizza
