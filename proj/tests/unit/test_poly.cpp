#include <doctest.h>

#include <numeric>
#include <random>

#include "pizza/error.hpp"
#include "pizza/poly.hpp"

using namespace pizza;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t arity, int max_degree, int terms) {
  std::uniform_int_distribution<int> e(0, max_degree), c(-9, 9), den(1, 5);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(arity);
    int budget = max_degree;
    for (auto& x : exps) {
      x = std::min(budget, e(rng) / 2);
      budget -= x;
    }
    out.push_back({Monomial(exps), Rational(c(rng), den(rng))});
  }
  return Poly::from_terms(arity, out);
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t arity) {
  std::uniform_int_distribution<long> v(-7, 7), den(1, 4);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < arity; ++i) p.emplace_back(v(rng), den(rng));
  return p;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("monomial order is graded lex") {
  const int a[] = {2, 0, 0}, b[] = {1, 1, 0}, c[] = {0, 0, 3};
  CHECK(Monomial(a) > Monomial(b));
  CHECK(Monomial(c) > Monomial(a));
  CHECK(Monomial(b).divides(Monomial(a) * Monomial(b)));
  CHECK_FALSE(Monomial(c).divides(Monomial(a)));
  CHECK((Monomial(a) * Monomial(b)) / Monomial(b) == Monomial(a));
}

TEST_CASE("poly canonical form merges and drops zeros") {
  const int e[] = {1, 0};
  Poly p = Poly::from_terms(2, {{Monomial(e), Rational(1)}, {Monomial(e), Rational(-1)}});
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  const int lin[] = {1, -1};
  const Poly f = Poly::linear_form(lin);
  CHECK(f.to_string() == "a1 - a2");
  CHECK((f * f).to_string() == "a1^2 - 2*a1*a2 + a2^2");
}

TEST_CASE("poly ring operations agree with evaluation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t arity = 1 + trial % 4;
    const Poly p = random_poly(rng, arity, 5, 6), q = random_poly(rng, arity, 5, 6);
    const auto x = random_point(rng, arity);
    CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    CHECK((p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x));
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    CHECK(p.pow(3).evaluate(x) == p.evaluate(x) * p.evaluate(x) * p.evaluate(x));
    CHECK(p * q == q * p);
    CHECK(add(p, q) == p + q);
    CHECK(mul(p, q) == p * q);
  }
}

TEST_CASE("substitute_linear matches evaluation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly p = random_poly(rng, 3, 6, 8);
    const int form_coeffs[] = {2, -1, 0};
    const Poly form = Poly::linear_form(form_coeffs);
    const Poly s = substitute_linear(p, 2, form);
    auto x = random_point(rng, 3);
    auto y = x;
    y[2] = Rational(2) * x[0] - x[1];
    CHECK(s.evaluate(x) == p.evaluate(y));
  }
}

TEST_CASE("exact linear division inverts multiplication") {
  std::mt19937_64 rng(13);
  const int forms[][3] = {{1, -1, 0}, {0, 1, 1}, {2, 0, -3}, {1, 1, 1}};
  for (int trial = 0; trial < 40; ++trial) {
    const Poly q = random_poly(rng, 3, 6, 7);
    const Poly form = Poly::linear_form(forms[trial % 4]);
    CHECK(exact_divide_linear(q * form, form) == q);
  }
  const int xy[] = {1, -1};
  const Poly x2 = Poly::variable(2, 0) * Poly::variable(2, 0);
  CHECK_THROWS_AS(exact_divide_linear(x2, Poly::linear_form(xy)), NonDivisible);
}

TEST_CASE("vandermonde division") {
  const auto vars = iota(4);
  const Poly v = vandermonde(4, vars, false);
  CHECK(v.degree() == 6);
  CHECK(divide_by_vandermonde(v, vars, false) == Poly::constant(4, Rational(1)));
  const Poly v2 = vandermonde(4, vars, true);
  CHECK(v2.degree() == 12);
  std::mt19937_64 rng(14);
  const Poly sym = random_poly(rng, 4, 2, 1) + random_poly(rng, 4, 2, 1);
  Poly symmetric(4);
  std::vector<std::size_t> perm = vars;
  do {
    symmetric += sym.permuted(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(divide_by_vandermonde(v2 * symmetric, vars, true) == symmetric);
  CHECK_THROWS_AS(divide_by_vandermonde(symmetric + Poly::variable(4, 0), vars, false), NonDivisible);
}

TEST_CASE("skew symmetry and variable maps") {
  const auto vars = iota(3);
  const Poly v = vandermonde(3, vars, false);
  CHECK(is_skew_under_transposition(v, 0, 1));
  CHECK(is_skew_under_transposition(v, 0, 2));
  CHECK_FALSE(is_skew_under_transposition(v * v, 0, 1));
  CHECK(v.swapped(0, 1) == -v);
  const Poly x = Poly::variable(3, 1);
  CHECK(x.with_negated_variable(1) == -x);
  CHECK(x.with_arity(5).arity() == 5);
  CHECK(x.with_arity(5).with_arity(3) == x);
}

TEST_CASE("homogeneity and degree bookkeeping") {
  const auto vars = iota(3);
  const Poly v = vandermonde(3, vars, false);
  CHECK(v.is_homogeneous());
  CHECK(v.min_degree() == 3);
  CHECK_FALSE((v + Poly::constant(3, Rational(1))).is_homogeneous());
  CHECK(Poly::constant(3, Rational(5)).is_constant());
  const double pt[] = {3.0, 2.0, 1.0};
  CHECK(v.evaluate(pt) == doctest::Approx(2.0));
}
