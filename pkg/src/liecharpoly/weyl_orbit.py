"""Weyl orbits of weights, dominant representatives and stabilizer orders."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import NotDominant
from .root_system import LieType, RootSystem, _components, weyl_group_order


def is_dominant(w: Sequence[int]) -> bool:
    return all(x >= 0 for x in w)


@dataclass(frozen=True)
class Orbit:
    """An orbit listed breadth-first from its dominant element.

    ``witness_words[w]`` is a shortest word ``(i1, i2, ...)`` with
    ``rs.apply_word(word, dominant) == w``.
    """

    dominant: tuple[int, ...]
    elements: tuple[tuple[int, ...], ...]
    stabilizer_order: int
    witness_words: Mapping[tuple[int, ...], tuple[int, ...]]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.witness_words

    def to_json(self) -> dict:
        return {
            "dominant": list(self.dominant),
            "elements": [list(w) for w in self.elements],
            "size": self.size,
            "stabilizer_order": self.stabilizer_order,
        }


def dominant_representative(rs: RootSystem, w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(dominant, word)`` where applying ``word`` to ``w`` gives ``dominant``."""
    w = tuple(w)
    word = []
    while True:
        i = next((k for k, x in enumerate(w) if x < 0), None)
        if i is None:
            return w, tuple(word)
        w = rs.reflect(i + 1, w)
        word.append(i + 1)


def _bfs(rs: RootSystem, start: tuple[int, ...]) -> dict[tuple[int, ...], tuple[int, ...]]:
    # Reflections are inlined on the Cartan rows: this loop dominates large sweeps.
    rows = [(i + 1, i, [(j, a) for j, a in enumerate(row) if a]) for i, row in enumerate(rs.cartan)]
    words = {start: ()}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        base = words[w]
        for i, k, row in rows:
            c = w[k]
            if c == 0:
                continue
            u = list(w)
            for j, a in row:
                u[j] -= c * a
            u = tuple(u)
            if u not in words:
                words[u] = base + (i,)
                queue.append(u)
    return words


@lru_cache(maxsize=4096)
def _orbit(rs: RootSystem, dom: tuple) -> Orbit:
    words = _bfs(rs, dom)
    stab = stabilizer_order(rs, dom)
    if len(words) * stab != rs.weyl_order:
        raise AssertionError(
            f"orbit of {dom} in {rs.lie_type}: {len(words)} elements but stabilizer order {stab}")
    return Orbit(dominant=dom, elements=tuple(words), stabilizer_order=stab,
                 witness_words=MappingProxyType(words))


def orbit(rs: RootSystem, w: Sequence[int]) -> Orbit:
    """Full Weyl orbit of ``w`` (which need not be dominant)."""
    dom, _ = dominant_representative(rs, w)
    return _orbit(rs, dom)


def orbit_size(rs: RootSystem, w: Sequence[int]) -> int:
    dom, _ = dominant_representative(rs, w)
    return rs.weyl_order // stabilizer_order(rs, dom)


def _classify(cartan, comp: list[int]) -> LieType:
    k = len(comp)
    entries = {cartan[i][j] for i in comp for j in comp if i != j}
    if -3 in entries:
        return LieType("G", 2)
    if -2 in entries:
        return LieType("B", k)
    degree = [sum(1 for j in comp if j != i and cartan[i][j]) for i in comp]
    if max(degree, default=0) >= 3:
        return LieType("D", k)
    return LieType("A", k)


def parabolic_components(rs: RootSystem, nodes: Sequence[int]) -> list[LieType]:
    """Types of the connected components of the subdiagram on ``nodes`` (0-based)."""
    return [_classify(rs.cartan, c) for c in _components(rs.cartan, nodes)]


def stabilizer_order(rs: RootSystem, w: Sequence[int]) -> int:
    """Order of the stabilizer of a dominant weight: the parabolic subgroup on its zero coordinates."""
    if not is_dominant(w):
        raise NotDominant(f"{tuple(w)} is not dominant")
    zeros = [i for i, x in enumerate(w) if x == 0]
    order = 1
    for t in parabolic_components(rs, zeros):
        order *= weyl_group_order(t)
    return order
