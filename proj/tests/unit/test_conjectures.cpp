#include <doctest.h>

#include <cmath>
#include <random>

#include "pizza/conjectures.hpp"
#include "pizza/error.hpp"
#include "pizza/oracle.hpp"
#include "pizza/taylor.hpp"

using namespace pizza;

TEST_CASE("sign conjectures hold on small arrangements") {
  for (int n : {2, 3}) {
    const auto centers = random_centers(ArrangementSpec::type_a(n), 4, 0.4, 100 + n);
    const ConjectureReport r = check_sign_A(n, centers);
    CAPTURE(n);
    CHECK(r.conjecture_id == "signA");
    CHECK(r.verdict == Verdict::consistent);
  }
  for (int n : {3, 5}) {
    const auto centers = random_centers(ArrangementSpec::type_d(n), 4, 0.4, 200 + n);
    const ConjectureReport r = check_sign_D(n, centers);
    CAPTURE(n);
    CHECK(r.conjecture_id == "signD");
    CHECK(r.verdict == Verdict::consistent);
  }
}

TEST_CASE("sign check with a Monte Carlo cross-check") {
  SignCheckOptions opts;
  opts.samples = 200000;
  opts.seed = 4;
  const std::vector<std::vector<double>> centers = {{0.6, 0.1, -0.7}, {-0.2, 0.7, -0.5}};
  const ConjectureReport r = check_sign_A(2, centers, opts);
  CHECK(r.verdict == Verdict::consistent);
  CHECK(r.witnesses.empty());
}

TEST_CASE("origin center is degenerate") {
  const ConjectureReport r = check_sign_D(3, {{0.0, 0.0, 0.0}});
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK_FALSE(r.notes.empty());
  CHECK_THROWS_AS(check_sign_D(3, {{0.2, 0.2, 0.1}}), OnHyperplane);
}

TEST_CASE("structural audits in the verified range") {
  CHECK(check_lemma51(3, 6).verdict == Verdict::consistent);
  CHECK(check_lemma51(3, 10).verdict == Verdict::consistent);
  CHECK(check_lemma51(5, 20).verdict == Verdict::consistent);
  CHECK(check_y_negativity(3, 16).verdict == Verdict::consistent);
  CHECK(schur_reconstruct(3, 6).verdict == Verdict::consistent);
  CHECK(schur_reconstruct(3, 8).verdict == Verdict::consistent);
  CHECK(schur_reconstruct(5, 20).verdict == Verdict::consistent);
  CHECK(check_t_positivity(24).verdict == Verdict::consistent);
}

TEST_CASE("staircase coefficients of Y are negative") {
  // n = 3: variables a1, a2; staircase exponents (2 l1 + 2, 2 l2).
  for (int d : {6, 8, 10}) {
    const Poly y = y_poly(3, d);
    for (int l2 = 0; 2 * l2 <= (d - 2) / 2; ++l2) {
      const int l1 = (d - 2) / 2 - l2;
      if (l1 < l2) continue;
      const int e[] = {2 * l1 + 2, 2 * l2};
      CAPTURE(d);
      CAPTURE(l1);
      CHECK(y.coefficient(Monomial(e)) < Rational(0));
    }
  }
}

TEST_CASE("Schur reconstruction rebuilds z") {
  for (const auto& [n, d] : {std::pair{3, 6}, std::pair{3, 10}, std::pair{5, 22}}) {
    const Poly z = z_poly(ArrangementSpec::type_d(n), d);
    CHECK(schur_reconstruction(n, d, y_poly(n, d)) == z);
  }
}

TEST_CASE("t quotient matches numeric evaluation") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int d = 6; d <= 20; d += 2) {
    const Poly q = t_quotient(d);
    const TPoly t = t_poly(3, 2, d);
    for (int i = 0; i < 5; ++i) {
      const double a1 = u(rng), a2 = u(rng);
      const double forms[] = {(a1 + a2) / std::sqrt(2.0), (a1 - a2) / std::sqrt(2.0)};
      const double expected = -t.body.evaluate(forms) / (a1 * a1 - a2 * a2);
      const double pt[] = {a1, a2};
      CAPTURE(d);
      CHECK(q.evaluate(pt) == doctest::Approx(expected).epsilon(1e-9));
    }
    const Poly uv = rewrite_in_uv(q);
    for (const Term& term : uv.terms()) CHECK(term.coeff > Rational(0));
  }
}

TEST_CASE("uv rewriting") {
  const Poly a1 = Poly::variable(2, 0), a2 = Poly::variable(2, 1);
  const Poly u = a1 * a1 + a2 * a2, v = a1 * a1 * a2 * a2;
  const Poly w = rewrite_in_uv(u * u + v.scaled(Rational(3)));
  const int u2[] = {2, 0}, v1[] = {0, 1};
  CHECK(w.coefficient(Monomial(u2)) == Rational(1));
  CHECK(w.coefficient(Monomial(v1)) == Rational(3));
  CHECK(w.size() == 2);
  CHECK_THROWS_AS(rewrite_in_uv(a1 * a1), RewriteFailed);
  CHECK_THROWS_AS(rewrite_in_uv(a1 * a2), RewriteFailed);
}

TEST_CASE("check modes") {
  CHECK(default_mode(7) == CheckMode::test);
  CHECK(default_mode(9) == CheckMode::explore);
  CHECK(verdict_name(Verdict::violated) == "violated");
}
