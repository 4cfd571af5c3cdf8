from __future__ import annotations

from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecharpoly.errors import NotDominant
from liecharpoly.root_system import build
from liecharpoly.weyl_orbit import dominant_representative, is_dominant, orbit, orbit_size, stabilizer_order

TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "D4", "G2"]


def closure_orbit(rs, w):
    """Orbit by repeated reflection until nothing new appears."""
    seen = {tuple(w)}
    frontier = [tuple(w)]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(1, rs.rank + 1):
                v = rs.reflect(i, u)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def weyl_group_matrices(rs):
    """All Weyl group elements as integer matrices acting on fundamental coordinates."""
    n = rs.rank
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def act(g, i):
        # columns of g are images of basis vectors; reflect each column
        cols = [rs.reflect(i, tuple(g[r][c] for r in range(n))) for c in range(n)]
        return tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))

    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for i in range(1, n + 1):
                h = act(g, i)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def apply(g, w):
    return tuple(sum(g[r][c] * w[c] for c in range(len(w))) for r in range(len(w)))


@pytest.mark.parametrize("name", TYPES)
def test_weyl_group_enumeration_has_the_right_order(name):
    rs = build(name)
    assert len(weyl_group_matrices(rs)) == rs.weyl_order


@pytest.mark.parametrize("name", TYPES)
def test_orbits_and_stabilizers_against_the_whole_group(name):
    rs = build(name)
    group = weyl_group_matrices(rs)
    for w in cartesian(range(3), repeat=rs.rank):
        orb = orbit(rs, w)
        assert set(orb.elements) == closure_orbit(rs, w) == {apply(g, w) for g in group}
        assert stabilizer_order(rs, w) == sum(apply(g, w) == w for g in group)
        assert orb.size * orb.stabilizer_order == rs.weyl_order


@pytest.mark.parametrize("name", TYPES)
def test_witness_words_reach_each_element(name):
    rs = build(name)
    w = tuple(1 for _ in range(rs.rank))
    orb = orbit(rs, w)
    for u in orb.elements:
        assert rs.apply_word(orb.witness_words[u], orb.dominant) == u


def test_a2_orbit_sizes():
    rs = build("A2")
    assert orbit_size(rs, (0, 0)) == 1
    assert orbit_size(rs, (3, 0)) == orbit_size(rs, (0, 5)) == 3
    assert orbit_size(rs, (1, 1)) == 6


def test_a2_orbit_of_the_first_fundamental_weight():
    assert set(orbit(build("A2"), (1, 0)).elements) == {(1, 0), (-1, 1), (0, -1)}


def test_orbit_starts_at_the_dominant_representative():
    rs = build("B2")
    orb = orbit(rs, (-1, 2))
    assert orb.dominant == (1, 0) and orb.elements[0] == (1, 0)
    assert (-1, 2) in orb


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_dominant_representative(name, data):
    rs = build(name)
    w = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank)))
    dom, word = dominant_representative(rs, w)
    assert is_dominant(dom)
    assert rs.apply_word(word, w) == dom
    assert dom in closure_orbit(rs, w)


def test_stabilizer_requires_dominant():
    with pytest.raises(NotDominant):
        stabilizer_order(build("A2"), (-1, 1))


def test_orbit_json():
    data = orbit(build("A2"), (1, 1)).to_json()
    assert data["size"] == 6 and data["stabilizer_order"] == 1 and data["dominant"] == [1, 1]
