#include <doctest.h>

#include <cmath>

#include "pizza/error.hpp"
#include "pizza/oracle.hpp"

using namespace pizza;

namespace {

double half_ball_difference_2d(double x) { return 2 * (x * std::sqrt(1 - x * x) + std::asin(x)); }

}  // namespace

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(0) == doctest::Approx(1.0));
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
  CHECK(unit_ball_volume(2) == doctest::Approx(M_PI));
  CHECK(unit_ball_volume(3) == doctest::Approx(4 * M_PI / 3));
  CHECK(unit_ball_volume(4) == doctest::Approx(M_PI * M_PI / 2));
}

TEST_CASE("single hyperplane closed forms") {
  for (double x : {0.05, 0.3, -0.45, 0.7}) {
    CAPTURE(x);
    const double c[] = {x};
    CHECK(a1k_pizza_quadrature(2, 1, c) == doctest::Approx(half_ball_difference_2d(x)).epsilon(1e-12));
    CHECK(a1k_pizza_quadrature(3, 1, c) == doctest::Approx(2 * M_PI * (x - x * x * x / 3)).epsilon(1e-12));
    const SeriesValue s = a1k_pizza_series(3, 1, c, 3);
    CHECK(s.value == doctest::Approx(2 * M_PI * (x - x * x * x / 3)).epsilon(1e-14));
    CHECK(s.tail_bound == doctest::Approx(0.0));
  }
}

TEST_CASE("coordinate quadrants in the plane") {
  const double c[] = {0.3, -0.2};
  CHECK(a1k_pizza_series(2, 2, c, 2).value == doctest::Approx(4 * 0.3 * -0.2).epsilon(1e-15));
  CHECK(a1k_pizza_quadrature(2, 2, c) == doctest::Approx(-0.24).epsilon(1e-12));
  const double c3[] = {0.1, 0.2, 0.3};
  CHECK(a1k_pizza_series(3, 3, c3, 3).value == doctest::Approx(8 * 0.006).epsilon(1e-14));
}

TEST_CASE("series agrees with quadrature within its tail bound") {
  const struct {
    int n, k;
    std::vector<double> x;
  } cases[] = {{2, 1, {0.6}}, {4, 1, {0.35}}, {5, 2, {0.3, -0.25}}, {6, 3, {0.2, 0.3, 0.1}}, {4, 2, {0.5, 0.4}}};
  for (const auto& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.k);
    const double q = a1k_pizza_quadrature(c.n, c.k, c.x);
    for (int cap : {c.k + 4, c.k + 10, c.k + 40}) {
      const SeriesValue s = a1k_pizza_series(c.n, c.k, c.x, cap);
      CHECK(std::abs(s.value - q) <= s.tail_bound + 1e-10);
    }
    CHECK(a1k_pizza_series(c.n, c.k, c.x, c.k + 80).tail_bound < 1e-8);
  }
}

TEST_CASE("series tail bounds shrink as the cap grows") {
  const double x[] = {0.4, 0.3};
  double prev = INFINITY;
  for (int cap = 2; cap <= 40; cap += 2) {
    const SeriesValue s = a1k_pizza_series(7, 2, x, cap);
    CHECK(s.tail_bound <= prev);
    prev = s.tail_bound;
  }
  const double far[] = {0.8, 0.7};
  CHECK_THROWS_AS(a1k_pizza_series(5, 2, far, 10), DivergentRegion);
}

TEST_CASE("series changes sign with a coordinate") {
  const double x[] = {0.3, 0.2, -0.1};
  const double y[] = {0.3, -0.2, -0.1};
  CHECK(a1k_pizza_series(6, 3, x, 21).value == doctest::Approx(-a1k_pizza_series(6, 3, y, 21).value));
}

TEST_CASE("Monte Carlo agrees with closed forms") {
  const auto spec = ArrangementSpec::a1k(1, 3);
  const BallSpec ball{{0.3, 0.1, -0.2}, 1.0};
  const McEstimate e = mc_pizza(spec, ball, 400000, 9);
  const double exact = 2 * M_PI * (0.3 - 0.027 / 3);
  CHECK(std::abs(e.value - exact) <= 4 * e.std_error);
  const auto quad = ArrangementSpec::a1k(2, 2);
  const McEstimate q = mc_pizza(quad, {{0.3, -0.2}, 1.0}, 400000, 10);
  CHECK(std::abs(q.value - (-0.24)) <= 4 * q.std_error);
}

TEST_CASE("Monte Carlo is reproducible and thread independent") {
  const auto spec = ArrangementSpec::type_d(3);
  const BallSpec ball{{0.3, 0.2, 0.1}, 1.0};
  const McEstimate a = mc_pizza(spec, ball, 100000, 42, 1);
  const McEstimate b = mc_pizza(spec, ball, 100000, 42, 4);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(mc_pizza(spec, ball, 100000, 43, 1).value != a.value);
}

TEST_CASE("Monte Carlo radius scaling and reflection") {
  const auto spec = ArrangementSpec::type_a(2);
  const McEstimate unit = mc_pizza(spec, {{0.4, -0.1, -0.3}, 1.0}, 200000, 5);
  const McEstimate big = mc_pizza(spec, {{0.8, -0.2, -0.6}, 2.0}, 200000, 5);
  CHECK(big.value == doctest::Approx(4 * unit.value).epsilon(1e-9));
  // Swapping two coordinates reflects the ball across a hyperplane.
  const McEstimate swapped = mc_pizza(spec, {{-0.1, 0.4, -0.3}, 1.0}, 200000, 5);
  CHECK(std::abs(swapped.value + unit.value) <= 4 * std::hypot(unit.std_error, swapped.std_error));
}

TEST_CASE("sum over 2-structures is skew and scales with the radius") {
  const auto spec = ArrangementSpec::type_d(3);
  const SeriesValue a = sum_over_2structures(spec, {{0.3, 0.2, 0.1}, 1.0}, 40);
  const SeriesValue b = sum_over_2structures(spec, {{0.2, 0.3, 0.1}, 1.0}, 40);
  CHECK(a.value == doctest::Approx(-b.value).epsilon(1e-12));
  const SeriesValue c = sum_over_2structures(spec, {{0.6, 0.4, 0.2}, 2.0}, 40);
  CHECK(c.value == doctest::Approx(8 * a.value).epsilon(1e-12));
  CHECK(std::abs(sum_over_2structures(spec, {{0.3, 0.2, 0.1}, 1.0}, 60).value - a.value) <= a.tail_bound);
}

TEST_CASE("sum over 2-structures agrees with Monte Carlo") {
  const auto spec = ArrangementSpec::type_a(2);
  const BallSpec ball{{0.5, -0.1, -0.4}, 1.0};
  const int cap = degree_cap_for_tail(spec, ball, 1e-8);
  const SeriesValue s = sum_over_2structures(spec, ball, cap);
  CHECK(s.tail_bound < 1e-8);
  const McEstimate e = mc_pizza(spec, ball, 400000, 77);
  CHECK(std::abs(e.value - s.value) <= 4 * e.std_error + s.tail_bound);
}

TEST_CASE("ball validation") {
  CHECK_THROWS_AS(validate_ball(ArrangementSpec::type_a(2), {{0.1, 0.2}, 1.0}), ArityMismatch);
  CHECK_THROWS(validate_ball(ArrangementSpec::type_a(2), {{0.1, 0.2, 0.3}, 1.0}));
  CHECK_THROWS(validate_ball(ArrangementSpec::type_d(3), {{0.1, 0.2, 0.3}, -1.0}));
  CHECK_NOTHROW(validate_ball(ArrangementSpec::type_d(3), {{0.1, 0.2, 0.3}, 1.0}));
}

TEST_CASE("random centers respect norm and margin") {
  const auto spec = ArrangementSpec::type_a(3);
  const auto centers = random_centers(spec, 20, 0.4, 8, 0.01);
  REQUIRE(centers.size() == 20);
  const auto roots = numeric_roots(spec);
  for (const auto& c : centers) {
    double sum = 0, sq = 0;
    for (double x : c) {
      sum += x;
      sq += x * x;
    }
    CHECK(std::abs(sum) < 1e-12);
    CHECK(std::sqrt(sq) <= 0.4 + 1e-12);
    for (const auto& r : roots) {
      double p = 0;
      for (std::size_t i = 0; i < c.size(); ++i) p += r[i] * c[i];
      CHECK(std::abs(p) >= 0.01);
    }
  }
  CHECK(random_centers(spec, 5, 0.4, 8, 0.01) == std::vector(centers.begin(), centers.begin() + 5));
}
