import math
from fractions import Fraction

import pytest

import pizza


def test_spec_fields():
    s = pizza.Spec("D:5")
    assert s.family == "D"
    assert s.rank == 5
    assert s.positive_root_count == 20
    assert str(s) == "D:5"
    assert pizza.Spec("A:6").ambient_dim == 7
    with pytest.raises(pizza.ParseError):
        pizza.Spec("B:3")


def test_small_quotients():
    a2 = pizza.Spec("A:2")
    assert pizza.quotient(a2, 3).terms() == [((0, 0, 0), Fraction(1, 2))]
    assert pizza.p2_multiple(pizza.quotient(a2, 5), a2) == Fraction(3, 32)
    d3 = pizza.Spec("D:3")
    assert pizza.describe_quotient(pizza.quotient(d3, 8), d3) == "-1/10*p2"
    assert pizza.quotient(d3, 8) == pizza.power_sum_p2(3).scaled(Fraction(-1, 10))


def test_z_poly_is_skew():
    z = pizza.z_poly(pizza.Spec("A:3"), 6)
    assert z.degree == 6
    x = [0.4, 0.1, -0.2, -0.3]
    y = [0.1, 0.4, -0.2, -0.3]
    assert z.evaluate(x) == pytest.approx(-z.evaluate(y))


def test_parity_errors():
    with pytest.raises(pizza.ParityViolation):
        pizza.z_poly(pizza.Spec("A:4"), 10)
    with pytest.raises(pizza.ResourceLimit):
        pizza.z_poly(pizza.Spec("A:10"), 55)
    assert issubclass(pizza.ParityViolation, pizza.PizzaError)


def test_matchings():
    ms = pizza.matchings(5)
    assert len(ms) == pizza.matching_count(5) == 15
    assert sum(sign for _, _, sign in ms) == 1
    assert pizza.sign_sum(9) == 1
    assert pizza.crossings([(1, 5), (3, 8), (4, 6), (7, 9)], 2, 9) == (3, 1)


def test_oracles_agree():
    x = 0.3
    value, tail = pizza.a1k_pizza_series(3, 1, [x], 3)
    assert value == pytest.approx(2 * math.pi * (x - x**3 / 3))
    assert pizza.a1k_pizza_quadrature(3, 1, [x]) == pytest.approx(value, rel=1e-12)
    spec = pizza.Spec("A:2")
    center = [0.5, -0.1, -0.4]
    cap = pizza.degree_cap_for_tail(spec, center, tail=1e-8)
    series, tail = pizza.sum_over_2structures(spec, center, degree_cap=cap)
    mc, err = pizza.mc_pizza(spec, center, samples=200_000, seed=3)
    assert abs(mc - series) <= 4 * err + tail


def test_checks():
    report = pizza.check_t_positivity(16)
    assert report["conjecture_id"] == "tPos"
    assert report["verdict"] == "consistent"
    assert pizza.check_y_negativity(3, 10)["verdict"] == "consistent"
    centers = pizza.random_centers(pizza.Spec("D:3"), 3, 0.4, seed=5)
    assert pizza.check_sign(pizza.Spec("D:3"), centers)["verdict"] == "consistent"


def test_tables_type_d():
    rows = pizza.tables("D")
    assert [(s, d) for s, d, _, _ in rows] == [("D:3", 6), ("D:3", 8), ("D:5", 20), ("D:5", 22)]
    assert all(ok for *_, ok in rows)
