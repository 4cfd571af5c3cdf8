from __future__ import annotations

import random
from fractions import Fraction
from itertools import product as cartesian

import pytest

from liecharpoly.eigen_map import scheme
from liecharpoly.errors import NotDominant
from liecharpoly.exact_poly import MultiPoly
from liecharpoly.orbital_factor import (assemble, factor_by_division, factor_by_division_at,
                                        generator_values_from_theta, orbit_product, orbital_factor,
                                        random_theta, sl2_closed_form, sl2_multiplicities)
from liecharpoly.root_system import build
from liecharpoly.weight_system import dim
from liecharpoly.weyl_orbit import orbit

z0 = MultiPoly.variable("z0")
p, q = MultiPoly.variable("e2"), MultiPoly.variable("e3")
s1, s2, s3 = (MultiPoly.variable(f"sb{k}") for k in (1, 2, 3))
g2, g6, t = MultiPoly.variable("g2"), MultiPoly.variable("g6"), MultiPoly.variable("t")
l1 = MultiPoly.variable("l1")


@pytest.mark.parametrize("name,mu,expected", [
    ("A2", (1, 0), z0 ** 3 + p * z0 + q),
    ("A2", (0, 1), z0 ** 3 + p * z0 - q),
    ("A2", (0, 4), z0 ** 3 + 16 * p * z0 - 64 * q),
    ("A2", (0, 0), z0),
    ("B2", (1, 0), z0 ** 4 - s1 * z0 ** 2 + s2),
    ("G2", (1, 0), z0 ** 6 + 2 * g2 * z0 ** 4 + g2 ** 2 * z0 ** 2 - g6),
    ("G2", (0, 1), z0 ** 6 + 6 * g2 * z0 ** 4 + 9 * g2 ** 2 * z0 ** 2 + 4 * g2 ** 3 + 27 * g6),
    ("D4", (1, 0, 0, 0), z0 ** 8 - s1 * z0 ** 6 + s2 * z0 ** 4 - s3 * z0 ** 2 + t * t),
])
def test_known_factors(name, mu, expected):
    assert orbital_factor(name, mu).poly == expected


def test_symbolic_b2_line():
    f = orbital_factor("B2", (3, 0), symbolic=True).poly
    assert f == z0 ** 4 - s1 * l1 ** 2 * z0 ** 2 + s2 * l1 ** 4


def test_symbolic_a1():
    f = orbital_factor("A1", (1,), symbolic=True).poly
    assert f == z0 ** 2 + l1 ** 2 * MultiPoly.variable("e2")


@pytest.mark.parametrize("name", ["A2", "B2", "C2", "G2"])
def test_symbolic_specializes_to_numeric(name):
    rs = build(name)
    for mu in [(1, 2), (3, 1), (2, 0), (0, 3)]:
        sym = orbital_factor(rs, mu, symbolic=True)
        values = {f"l{i + 1}": x for i, x in enumerate(mu) if x}
        assert sym.poly.substitute(values) == orbital_factor(rs, mu).poly, mu


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"])
def test_factor_is_monic_of_orbit_degree(name):
    rs = build(name)
    for mu in cartesian(range(2), repeat=rs.rank):
        if len(orbit(rs, mu)) > 32:
            continue  # the larger D4 orbits are covered by the acceptance suite
        f = orbital_factor(rs, mu)
        assert f.degree == len(orbit(rs, mu)) == f.poly.degree("z0")
        assert f.poly.coefficient({"z0": f.degree}) == 1
        assert all(v == "z0" or not v.startswith("theta") for v in f.poly.variables)


@pytest.mark.parametrize("name", ["A2", "B2", "C2", "D4", "G2"])
def test_factor_matches_direct_product_at_theta(name):
    """Evaluate the factor at the generator values of theta and compare with prod (z0 + v)."""
    rs = build(name)
    rng = random.Random(11)
    sch = scheme(rs)
    for mu in [tuple(int(i == 0) for i in range(rs.rank)), tuple(1 for _ in range(rs.rank))]:
        if len(orbit(rs, mu)) > 48:
            continue
        theta = random_theta(rs, rng)
        direct = MultiPoly(1)
        for w in orbit(rs, mu).elements:
            direct = direct * (z0 + sch.value(w, theta, projected=True))
        values = generator_values_from_theta(rs.lie_type, theta)
        assert orbital_factor(rs, mu).at(values) == direct


def test_orbit_product_pairs_opposite_forms():
    x = MultiPoly.variable("theta1") * Fraction(1, 2)
    assert orbit_product([x, -x, MultiPoly()]) == z0 * (z0 * z0 - x * x)


def test_assemble_degree_is_dimension():
    for name, lam in [("A2", (2, 1)), ("B2", (1, 1)), ("G2", (1, 0)), ("C3", (0, 1, 0))]:
        rs = build(name)
        assert assemble(rs, [lam]).degree == dim(rs, lam)


def test_assemble_direct_sum():
    fac = assemble("A2", [(1, 0), (0, 1)])
    assert fac.degree == 6
    assert fac.expand() == (z0 ** 3 + p * z0 + q) * (z0 ** 3 + p * z0 - q)


def test_non_dominant_rejected():
    with pytest.raises(NotDominant):
        orbital_factor("A2", (-1, 1))


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("B2", (1, 1)), ("G2", (1, 0)), ("C2", (0, 2))])
def test_division_route(name, lam):
    assert factor_by_division(name, lam).poly == orbital_factor(name, lam).poly


def test_division_at_a_point():
    rs = build("A3")
    theta = (2, -4, 8, -6)
    values = generator_values_from_theta(rs.lie_type, theta)
    assert factor_by_division_at(rs, (1, 1, 0), theta) == orbital_factor(rs, (1, 1, 0)).at(values)


def test_random_theta_is_admissible():
    rng = random.Random(0)
    for name in ["A3", "G2", "B3"]:
        rs = build(name)
        theta = random_theta(rs, rng)
        assert all(x % 2 == 0 and x for x in theta)
        if name != "B3":
            assert sum(theta) == 0


@pytest.mark.parametrize("m", range(0, 7))
def test_sl2_multiplicities_and_closed_form(m):
    d = sl2_multiplicities(m)
    assert sum(2 * k if n else k for n, k in d.items()) == m + 1
    closed = sl2_closed_form(d)
    assert closed.degree("z0") == m + 1


def test_json_and_latex():
    f = orbital_factor("A2", (0, 1))
    assert f.to_json()["degree"] == 3
    assert f.to_latex() == "z_{0}^{3} + z_{0}p - q"
    fac = assemble("A2", [(1, 1)])
    data = fac.to_json(expand=True)
    assert data["degree"] == 8 and "expanded" in data
