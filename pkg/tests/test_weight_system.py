from __future__ import annotations

from collections import Counter
from itertools import product as cartesian

import pytest

from liecharpoly.errors import NotDominant, NotInWeightSystem
from liecharpoly.matrix_oracle import adjoint_rep, defining_rep, induced_rep
from liecharpoly.root_system import build
from liecharpoly.weight_system import character_by_orbit, dim, dominant_weights_below, multiplicity
from liecharpoly.weyl_orbit import orbit

TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"]


def box_dominant_below(rs, lam):
    """Dominant mu with lam - mu a nonnegative integer combination of simple roots, by box search."""
    bound = 2 * max(lam) + 2
    out = []
    for mu in cartesian(range(bound + 1), repeat=rs.rank):
        if rs.inner(mu, mu) > rs.inner(lam, lam):
            continue
        diff = rs.weight_to_root(tuple(a - b for a, b in zip(lam, mu)))
        if all(c >= 0 and c.denominator == 1 for c in diff):
            out.append(mu)
    return set(out)


@pytest.mark.parametrize("name", TYPES)
def test_dominant_weights_against_box_search(name):
    rs = build(name)
    top = 2 if rs.rank <= 3 else 1
    for lam in cartesian(range(top + 1), repeat=rs.rank):
        assert set(dominant_weights_below(rs, lam)) == box_dominant_below(rs, lam), lam


def diagonal_weights(rep):
    """Weights read off the diagonal Cartan matrices of a representation."""
    hs = [rep.basis[f"h{i}"] for i in range(1, rep.lie_type.rank + 1)]
    return Counter(tuple(int(h[k][k]) for h in hs) for k in range(rep.dimension))


def character_weights(rs, highest):
    out = Counter()
    for lam in highest:
        for mu, _, m in character_by_orbit(rs, lam).entries:
            for w in orbit(rs, mu).elements:
                out[w] += m
    return out


MATRIX_CASES = (
    [(t, "defining") for t in TYPES]
    + [(t, "adjoint") for t in TYPES]
    + [("A2", "sym", k) for k in (2, 3, 4)]
    + [("A3", "ext", 2), ("A3", "sym", 2), ("B2", "sym", 2), ("C2", "sym", 2), ("B3", "ext", 2)]
)

# Decompositions of the induced modules above into highest weights.
INDUCED = {
    ("A2", "sym", 2): [(2, 0)], ("A2", "sym", 3): [(3, 0)], ("A2", "sym", 4): [(4, 0)],
    ("A3", "ext", 2): [(0, 1, 0)], ("A3", "sym", 2): [(2, 0, 0)],
    ("B2", "sym", 2): [(2, 0), (0, 0)], ("C2", "sym", 2): [(2, 0)], ("B3", "ext", 2): [(0, 1, 0)],
}


@pytest.mark.parametrize("case", MATRIX_CASES, ids=lambda c: "-".join(map(str, c)))
def test_multiplicities_against_matrix_diagonals(case):
    name = case[0]
    rs = build(name)
    if case[1] == "defining":
        rep = defining_rep(name)
        highest = rep.highest
    elif case[1] == "adjoint":
        rep = adjoint_rep(name)
        highest = rep.highest
    else:
        rep = induced_rep(defining_rep(name), case[1], case[2])
        highest = INDUCED[case]
    assert diagonal_weights(rep) == character_weights(rs, highest)


@pytest.mark.parametrize("name,lam,mu,m", [
    ("A2", (1, 1), (0, 0), 2),
    ("A2", (0, 4), (1, 2), 1),
    ("A2", (2, 2), (0, 0), 3),
    ("B2", (0, 2), (0, 0), 2),
    ("G2", (0, 1), (0, 0), 2),
    ("G2", (1, 0), (0, 0), 1),
    ("G2", (2, 0), (0, 0), 3),
    ("D4", (0, 1, 0, 0), (0, 0, 0, 0), 4),
])
def test_known_multiplicities(name, lam, mu, m):
    assert multiplicity(build(name), lam, mu) == m


@pytest.mark.parametrize("name,lam,d", [
    ("A2", (0, 4), 15), ("A2", (1, 1), 8), ("A3", (1, 1, 1), 64), ("B2", (1, 1), 16),
    ("C3", (0, 0, 1), 14), ("D4", (0, 0, 1, 0), 8), ("G2", (1, 0), 7), ("G2", (0, 1), 14), ("G2", (1, 1), 64),
])
def test_weyl_dimension(name, lam, d):
    rs = build(name)
    assert dim(rs, lam) == d == character_by_orbit(rs, lam).dimension


def test_multiplicity_of_non_weight():
    with pytest.raises(NotInWeightSystem):
        multiplicity(build("A2"), (1, 0), (0, 1))


def test_highest_weight_must_be_dominant():
    with pytest.raises(NotDominant):
        character_by_orbit(build("A2"), (-1, 2))


def test_character_json():
    data = character_by_orbit(build("A2"), (0, 4)).to_json()
    assert data["dimension"] == 15
    assert [e["dominant"] for e in data["entries"]] == [[0, 4], [1, 2], [2, 0], [0, 1]]
