from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecharpoly.errors import MixedParity, NotInvariant, NotSymmetric, OddE3
from liecharpoly.exact_poly import MultiPoly
from liecharpoly.invariant_reduce import (check_invariant, elementary, g2_to_sbar, generator_set, reduce_bc,
                                          reduce_d, reduce_for_type, reduce_g2, reduce_symmetric)
from liecharpoly.root_system import LieType

th = [MultiPoly.variable(f"theta{k}") for k in range(1, 5)]


def symmetrize(p: MultiPoly, n: int) -> MultiPoly:
    names = [f"theta{k}" for k in range(1, n + 1)]
    total = MultiPoly()
    for perm in permutations(names):
        total = total + p.substitute({a: MultiPoly.variable(b) for a, b in zip(names, perm)})
    return total


small_polys = st.lists(
    st.tuples(st.lists(st.integers(0, 3), min_size=3, max_size=3),
              st.fractions(min_value=-5, max_value=5, max_denominator=3)),
    min_size=1, max_size=3,
).map(lambda ts: MultiPoly.from_terms(({f"theta{k + 1}": e for k, e in enumerate(es)}, c) for es, c in ts))


@settings(max_examples=40, deadline=None)
@given(small_polys)
def test_symmetric_reduction_round_trip(p):
    sym = symmetrize(p, 3)
    reduced = reduce_symmetric(sym, 3)
    assert all(v.startswith("e") for v in reduced.variables)
    lifted = reduced.substitute({f"e{k}": elementary([f"theta{j}" for j in (1, 2, 3)], k) for k in (1, 2, 3)})
    assert lifted == sym


def test_power_sums_through_elementary():
    e1, e2, e3 = (MultiPoly.variable(f"e{k}") for k in (1, 2, 3))
    p2 = th[0] ** 2 + th[1] ** 2 + th[2] ** 2
    p3 = th[0] ** 3 + th[1] ** 3 + th[2] ** 3
    assert reduce_symmetric(p2, 3) == e1 * e1 - 2 * e2
    assert reduce_symmetric(p3, 3) == e1 ** 3 - 3 * e1 * e2 + 3 * e3


def test_non_symmetric_reports_the_transposition():
    with pytest.raises(NotSymmetric) as info:
        reduce_symmetric(th[0] ** 2 + th[1] ** 2 + th[2], 3)
    assert info.value.transposition == (2, 3)


def test_bc_reduction():
    s1, s2 = MultiPoly.variable("sb1"), MultiPoly.variable("sb2")
    p = (th[0] ** 2 + th[1] ** 2) ** 2
    assert reduce_bc(p, 2) == s1 * s1
    assert reduce_bc(th[0] ** 2 * th[1] ** 2, 2) == s2
    with pytest.raises(NotInvariant):
        reduce_bc(th[0] + th[1], 2)


def test_d_reduction_uses_the_pfaffian_generator():
    t = MultiPoly.variable("t")
    assert reduce_d(th[0] * th[1] * th[2] * th[3], 4) == t
    assert reduce_d(th[0] ** 2 * th[1] ** 2 * th[2] ** 2 * th[3] ** 2, 4) == t * t


def test_d_reduction_rejects_mixed_parity():
    p = th[0] * th[1] * th[2] * th[3] * (th[0] + th[1] + th[2] + th[3])
    with pytest.raises((MixedParity, NotInvariant)):
        reduce_d(p, 4)
    with pytest.raises(MixedParity):
        reduce_d(p, 4, check=False)


def test_g2_reduction():
    g2, g6 = MultiPoly.variable("g2"), MultiPoly.variable("g6")
    e2 = elementary(["theta1", "theta2", "theta3"], 2)
    e3 = elementary(["theta1", "theta2", "theta3"], 3)
    assert reduce_g2(e2 * e2 + 3 * e3 * e3) == g2 * g2 + 3 * g6
    with pytest.raises(NotInvariant):
        reduce_g2(e3)
    with pytest.raises(OddE3):
        reduce_g2(e3, check=False)


def test_g2_generators_in_bar_s():
    s1, s3 = MultiPoly.variable("sb1"), MultiPoly.variable("sb3")
    g2, g6 = MultiPoly.variable("g2"), MultiPoly.variable("g6")
    assert g2_to_sbar(g2 * g6) == s1 * s3 * Fraction(-1, 2)


@pytest.mark.parametrize("name", ["A1", "A3", "B3", "C2", "D4", "G2"])
def test_generator_degrees(name):
    t = LieType.parse(name)
    gens = generator_set(t)
    for g, d in zip(gens.names, gens.degrees):
        lifted = gens.definitions()[g]
        assert lifted.weighted_degree({}) == d


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C3", "D4", "G2"])
def test_random_round_trips(name):
    t = LieType.parse(name)
    gens = generator_set(t)
    rng = random.Random(5)
    for _ in range(25):
        exps = [rng.randint(0, 2) for _ in gens.names]
        poly = MultiPoly.from_terms([(dict(zip(gens.names, exps)), rng.randint(1, 9)),
                                     ({gens.names[0]: 1}, Fraction(-1, 3))])
        lifted = gens.lift(poly)
        check_invariant(t, lifted)
        assert reduce_for_type(t, lifted) == poly


@pytest.mark.parametrize("name,bad", [
    ("A2", th[0]),
    ("B2", th[1]),
    ("D4", th[3] ** 2 * th[0]),
    ("G2", th[0] * th[1] * th[2]),
])
def test_check_invariant_rejects(name, bad):
    with pytest.raises(NotInvariant):
        check_invariant(LieType.parse(name), bad)
