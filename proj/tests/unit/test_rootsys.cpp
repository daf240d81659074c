#include <doctest.h>

#include <cmath>
#include <algorithm>

#include "pizza/error.hpp"
#include "pizza/rootsys.hpp"

using namespace pizza;

namespace {

bool contains_up_to_sign(const std::vector<Root>& roots, const Root& r) {
  Root neg = r;
  for (int& c : neg.coords) c = -c;
  return std::find(roots.begin(), roots.end(), r) != roots.end() ||
         std::find(roots.begin(), roots.end(), neg) != roots.end();
}

}  // namespace

TEST_CASE("spec parsing and sizes") {
  CHECK(ArrangementSpec::parse("A:6") == ArrangementSpec::type_a(6));
  CHECK(ArrangementSpec::parse("D:5").positive_root_count == 20);
  CHECK(ArrangementSpec::parse("A1k:3@7").ambient_dim == 7);
  CHECK(ArrangementSpec::parse("I2:5").numeric_only());
  for (const char* s : {"A:6", "D:5", "A1k:3@7", "I2:5"}) CHECK(ArrangementSpec::parse(s).to_string() == s);
  CHECK_THROWS_AS(ArrangementSpec::parse("B:3"), ParseError);
  CHECK_THROWS_AS(ArrangementSpec::parse("A3"), ParseError);
  CHECK_THROWS(ArrangementSpec::parse("D:2"));
  const auto a6 = ArrangementSpec::type_a(6);
  CHECK(a6.dimension() == 6);
  CHECK(a6.ambient_dim == 7);
  CHECK(a6.two_structure_rank() == 3);
  CHECK(a6.matching_ground_size() == 7);
  const auto d5 = ArrangementSpec::type_d(5);
  CHECK(d5.two_structure_rank() == 4);
  CHECK(d5.matching_ground_size() == 5);
}

TEST_CASE("positive roots form a reflection-closed system") {
  for (const auto& spec : {ArrangementSpec::type_a(2), ArrangementSpec::type_a(4), ArrangementSpec::type_d(3),
                           ArrangementSpec::type_d(5)}) {
    const auto roots = positive_roots(spec);
    REQUIRE(static_cast<int>(roots.size()) == spec.positive_root_count);
    const int n = spec.rank;
    CHECK(spec.positive_root_count == (spec.family == Family::A ? n * (n + 1) / 2 : n * (n - 1)));
    for (const Root& a : roots) {
      CHECK(a.norm_squared == 2);
      CHECK(a.dot(a) == 2);
      for (const Root& b : roots) CHECK(contains_up_to_sign(roots, reflect(a, b)));
    }
  }
}

TEST_CASE("jacobian is the product of root forms") {
  const auto spec = ArrangementSpec::type_d(3);
  Poly prod = Poly::constant(3, Rational(1));
  for (const Root& r : positive_roots(spec)) prod = prod * r.linear_form();
  CHECK(jacobian_unnormalized(spec) == prod);
  CHECK(prod.degree() == 6);
}

TEST_CASE("chamber sign counts negative pairings") {
  const auto a2 = ArrangementSpec::type_a(2);
  const double base[] = {0.3, 0.0, -0.3};
  CHECK(chamber_sign(a2, base) == 1);
  const double swapped[] = {0.0, 0.3, -0.3};
  CHECK(chamber_sign(a2, swapped) == -1);
  const double wall[] = {0.1, 0.1, -0.2};
  CHECK_THROWS_AS(chamber_sign(a2, wall), OnHyperplane);
  const auto d3 = ArrangementSpec::type_d(3);
  const double p[] = {0.5, 0.3, 0.1};
  CHECK(chamber_sign(d3, p) == 1);
  const double q[] = {0.5, 0.1, 0.3};
  CHECK(chamber_sign(d3, q) == -1);
}

TEST_CASE("dihedral roots are unit vectors and signs alternate around the circle") {
  const int m = 5;
  const auto spec = ArrangementSpec::i2(m);
  const auto roots = numeric_roots(spec);
  REQUIRE(roots.size() == static_cast<std::size_t>(m));
  for (const auto& r : roots) CHECK(std::hypot(r[0], r[1]) == doctest::Approx(1.0));
  int prev = 0;
  for (int c = 0; c < 2 * m; ++c) {
    const double t = (c + 0.5) * M_PI / m + 0.01;
    const double pt[] = {std::cos(t), std::sin(t)};
    const int s = chamber_sign(spec, pt);
    if (c > 0) CHECK(s == -prev);
    prev = s;
  }
}
