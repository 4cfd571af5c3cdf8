"""Cartan data for the families A, B, C, D and G2.

Weights are integer tuples in the basis of fundamental weights; roots are
integer tuples in the basis of simple roots. Indices passed to public
functions are 1-based, matching the usual labelling of a Dynkin diagram.

Convention: ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` of the
Cartan matrix is the simple root ``alpha_i`` written in fundamental-weight
coordinates, and the simple reflection is ``w -> w - w_i * cartan[i]``.
With this orientation B_n has its short simple root at the end of the
diagram (``cartan[n-1][n] = -2``) and C_n has its long simple root there.

Type A is keyed by the rank of the root system: ``A{n-1}`` is sl(n).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Sequence

from .errors import IndexOutOfRange, InvalidRank, InvalidType

Weight = tuple  # tuple[int, ...] in fundamental-weight coordinates

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 2}
_TYPE_RE = re.compile(r"^\s*([ABCDGabcdg])\s*_?\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D", "G"):
            raise InvalidType(f"unknown family {self.family!r}")
        if self.family == "G":
            if self.rank != 2:
                raise InvalidRank(f"G{self.rank}: only G2 exists")
        elif self.rank < _MIN_RANK[self.family]:
            raise InvalidRank(f"{self.family}{self.rank}: rank must be >= {_MIN_RANK[self.family]}")

    @classmethod
    def parse(cls, text: str | "LieType") -> "LieType":
        if isinstance(text, LieType):
            return text
        m = _TYPE_RE.match(text)
        if m is None:
            raise InvalidType(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j], a[j][i] = aij, aji

    if t.family == "G":
        link(0, 1, -1, -3)
    elif t.family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 3:
            link(n - 3, n - 1)
    else:
        for i in range(n - 1):
            link(i, i + 1)
        if t.family == "B":
            link(n - 2, n - 1, -2, -1)
        elif t.family == "C":
            link(n - 2, n - 1, -1, -2)
    return tuple(tuple(row) for row in a)


def weyl_group_order(t: LieType) -> int:
    n = t.rank
    return {
        "A": factorial(n + 1),
        "B": 2 ** n * factorial(n),
        "C": 2 ** n * factorial(n),
        "D": 2 ** (n - 1) * factorial(n),
        "G": 12,
    }[t.family]


def _invert(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _symmetrizer(cartan) -> tuple[Fraction, ...]:
    """``d_i = (alpha_i, alpha_i) / 2`` with the longest roots at ``d = 1``."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] and d[j] is None:
                    # a_ij d_j = a_ji d_i
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    stack.append(j)
    # normalise each component of the diagram separately so its long roots have d = 1
    comp = _components(cartan, range(n))
    out = list(d)
    for c in comp:
        top = max(d[i] for i in c)
        for i in c:
            out[i] = d[i] / top
    return tuple(out)


def _components(cartan, nodes) -> list[list[int]]:
    nodes = list(nodes)
    seen: set[int] = set()
    comps = []
    for s in nodes:
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in nodes:
                if j not in seen and cartan[i][j]:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    """Root-string closure: ``r + alpha_i`` is a root iff ``p - <r, alpha_i^vee> > 0``."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for r in layer:
            for i in range(n):
                pairing = sum(r[j] * cartan[j][i] for j in range(n))
                p = 0
                down = list(r)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(r)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
                        ordered.append(up)
        layer = sorted(nxt)
    return tuple(sorted(ordered, key=lambda r: (sum(r), r)))


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    weyl_order: int
    positive_roots: tuple[tuple[int, ...], ...]
    fund_in_simple: tuple[tuple[Fraction, ...], ...]
    symmetrizer: tuple[Fraction, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def dimension(self) -> int:
        """Dimension of the Lie algebra."""
        return 2 * len(self.positive_roots) + self.rank

    def _check_index(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"reflection index {i} outside 1..{self.rank}")
        return i - 1

    def reflect(self, i: int, w: Sequence) -> tuple:
        """Simple reflection ``gamma_i`` (1-based) in fundamental coordinates."""
        k = self._check_index(i)
        if len(w) != self.rank:
            raise ValueError(f"weight {tuple(w)} does not have length {self.rank}")
        c = w[k]
        if not isinstance(c, int) or c:
            return tuple(x - c * a for x, a in zip(w, self.cartan[k]))
        return tuple(w)

    def apply_word(self, word: Sequence[int], w: Sequence) -> tuple:
        """Apply ``gamma_{word[0]}`` first, then ``gamma_{word[1]}``, and so on."""
        w = tuple(w)
        for i in word:
            w = self.reflect(i, w)
        return w

    def root_to_weight(self, root: Sequence[int]) -> tuple[int, ...]:
        """Simple-root coordinates to fundamental-weight coordinates."""
        n = self.rank
        return tuple(sum(root[j] * self.cartan[j][i] for j in range(n)) for i in range(n))

    def weight_to_root(self, w: Sequence[int]) -> tuple[Fraction, ...]:
        """Fundamental-weight coordinates to (rational) simple-root coordinates."""
        n = self.rank
        return tuple(sum((w[i] * self.fund_in_simple[i][j] for i in range(n)), Fraction(0))
                     for j in range(n))

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Invariant form on fundamental weights: ``(beta_i, beta_j) = F[j][i] * d_i``."""
        n, f, d = self.rank, self.fund_in_simple, self.symmetrizer
        return tuple(tuple(f[j][i] * d[i] for j in range(n)) for i in range(n))

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        g = self.gram
        return sum((u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank)
                    if u[i] and v[j]), Fraction(0))

    @property
    def rho(self) -> tuple[int, ...]:
        return (1,) * self.rank

    @cached_property
    def positive_roots_as_weights(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.root_to_weight(r) for r in self.positive_roots)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def coxeter_number(self, i: int, j: int) -> int:
        """Order of ``gamma_i gamma_j`` (1-based indices)."""
        if i == j:
            return 1
        a, b = self._check_index(i), self._check_index(j)
        return {0: 2, 1: 3, 2: 4, 3: 6}[self.cartan[a][b] * self.cartan[b][a]]

    def pairing(self, w: Sequence[int], root: Sequence[int]) -> Fraction:
        """``<w, root^vee>`` for a weight and a root given in simple-root coordinates."""
        rw = self.root_to_weight(root)
        return 2 * self.inner(w, rw) / self.inner(rw, rw)


def build(t: LieType | str) -> RootSystem:
    t = LieType.parse(t)
    return _build_cached(t)


@lru_cache(maxsize=None)
def _build_cached(t: LieType) -> RootSystem:
    cartan = cartan_matrix(t)
    return RootSystem(
        lie_type=t,
        cartan=cartan,
        weyl_order=weyl_group_order(t),
        positive_roots=_positive_roots(cartan),
        fund_in_simple=_invert(cartan),
        symmetrizer=_symmetrizer(cartan),
    )


def simple_reflection(rs: RootSystem, i: int, w: Sequence) -> tuple:
    return rs.reflect(i, w)


def parse_weight(text: str, rank: int | None = None) -> tuple[int, ...]:
    """Parse ``"1,0,2"`` into a weight, checking the length when ``rank`` is given."""
    try:
        w = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise ValueError(f"weight {text!r} is not a comma-separated list of integers") from None
    if rank is not None and len(w) != rank:
        raise ValueError(f"weight {text!r} has {len(w)} coordinates, expected {rank}")
    return w
