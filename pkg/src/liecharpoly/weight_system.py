"""Weight systems of irreducible modules: dominant weights, multiplicities, dimensions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm
from operator import add
from typing import Sequence

from .errors import NotDominant, NotInWeightSystem
from .root_system import RootSystem
from .weyl_orbit import dominant_representative, is_dominant, orbit_size


def _require_dominant(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    if not is_dominant(w):
        raise NotDominant(f"{w} is not dominant")
    return w


def depth(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Height of ``lam - mu`` in simple-root coordinates."""
    h = sum((a - b) * c for a, b, c in zip(lam, mu, _heights(rs)))
    if h.denominator != 1:
        raise NotInWeightSystem(f"{tuple(mu)} is not in the root lattice coset of {tuple(lam)}")
    return int(h)


@lru_cache(maxsize=None)
def _heights(rs: RootSystem) -> tuple[Fraction, ...]:
    return tuple(sum(row, Fraction(0)) for row in rs.fund_in_simple)


@lru_cache(maxsize=None)
def _dominant_finder(rs: RootSystem):
    """A memoized ``nu -> dominant representative`` on plain integer tuples."""
    rows = [[(j, a) for j, a in enumerate(row) if a] for row in rs.cartan]
    cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    def find(nu: tuple[int, ...]) -> tuple[int, ...]:
        d = cache.get(nu)
        if d is not None:
            return d
        w = list(nu)
        while True:
            for i, x in enumerate(w):
                if x < 0:
                    for j, a in rows[i]:
                        w[j] -= x * a
                    break
            else:
                break
        d = cache[nu] = tuple(w)
        return d

    return find


def dominant_weights_below(rs: RootSystem, lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Dominant weights of V(lam), highest first (ordered by depth, then coordinates descending)."""
    lam = _require_dominant(lam)
    return list(_dominant_below(rs, lam))


@lru_cache(maxsize=256)
def _dominant_below(rs: RootSystem, lam: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    # Every dominant weight below lam is reached from lam through dominant
    # weights by subtracting one positive root at a time.
    roots = rs.positive_roots_as_weights
    seen = {lam: 0}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for a in roots:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in seen and all(x >= 0 for x in nu):
                seen[nu] = 0
                queue.append(nu)
    scale = reduce(lcm, (h.denominator for h in _heights(rs)), 1)
    heights = tuple(int(h * scale) for h in _heights(rs))
    return tuple(sorted(seen, key=lambda mu: (sum((a - b) * c for a, b, c in zip(lam, mu, heights)),
                                              tuple(-x for x in mu))))


def _integer_form(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    g = rs.gram
    scale = reduce(lcm, (x.denominator for row in g for x in row), 1)
    return tuple(tuple(int(x * scale) for x in row) for row in g)


def _dot(g, u, v) -> int:
    return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])


@lru_cache(maxsize=256)
def _freudenthal(rs: RootSystem, lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    g = _integer_form(rs)
    n = rs.rank
    roots = rs.positive_roots_as_weights
    # (nu, alpha) = nu . g_alpha
    g_roots = [tuple(sum(g[i][j] * a[j] for j in range(n)) for i in range(n)) for a in roots]
    rho = rs.rho
    lr = tuple(x + 1 for x in lam)
    c_lam = _dot(g, lr, lr)
    dominants = _dominant_below(rs, lam)
    mult: dict[tuple[int, ...], int] = {lam: 1}
    dom = _dominant_finder(rs)

    # (nu + k a, a) = (nu, a) + k (a, a) along each root string
    strings = [(a, ga, sum(x * y for x, y in zip(a, ga))) for a, ga in zip(roots, g_roots)]

    for mu in dominants[1:]:
        mr = tuple(x + r for x, r in zip(mu, rho))
        denom = c_lam - _dot(g, mr, mr)
        total = 0
        for a, ga, aa in strings:
            nu = mu
            ip = sum(x * y for x, y in zip(mu, ga))
            while True:
                nu = tuple(map(add, nu, a))
                ip += aa
                m = mult.get(dom(nu))
                if m is None:
                    break
                total += m * ip
        value = Fraction(2 * total, denom)
        if value.denominator != 1 or value <= 0:
            raise AssertionError(f"non-integral multiplicity {value} for {mu} in V({lam})")
        mult[mu] = int(value)
    return mult


def multiplicity(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Multiplicity of the weight ``mu`` in V(lam) by Freudenthal's recursion."""
    lam = _require_dominant(lam)
    d, _ = dominant_representative(rs, mu)
    table = _freudenthal(rs, lam)
    if d not in table:
        raise NotInWeightSystem(f"{tuple(mu)} is not a weight of V({lam})")
    return table[d]


def dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Weyl dimension formula."""
    lam = _require_dominant(lam)
    lr = tuple(x + 1 for x in lam)
    num = den = Fraction(1)
    for a in rs.positive_roots_as_weights:
        num *= rs.inner(lr, a)
        den *= rs.inner(rs.rho, a)
    value = num / den
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class CharacterByOrbit:
    """Formal character grouped into Weyl orbits: ``(dominant, orbit_size, multiplicity)``."""

    highest: tuple[int, ...]
    entries: tuple[tuple[tuple[int, ...], int, int], ...]

    @property
    def dimension(self) -> int:
        return sum(size * m for _, size, m in self.entries)

    def to_json(self) -> dict:
        return {
            "highest": list(self.highest),
            "dimension": self.dimension,
            "entries": [{"dominant": list(mu), "orbit_size": size, "multiplicity": m}
                        for mu, size, m in self.entries],
        }


def character_by_orbit(rs: RootSystem, lam: Sequence[int]) -> CharacterByOrbit:
    lam = _require_dominant(lam)
    table = _freudenthal(rs, lam)
    entries = tuple((mu, orbit_size(rs, mu), table[mu]) for mu in _dominant_below(rs, lam))
    ch = CharacterByOrbit(lam, entries)
    expected = dim(rs, lam)
    if ch.dimension != expected:
        raise AssertionError(f"V({lam}): orbit sum {ch.dimension} != Weyl dimension {expected}")
    return ch
