"""Explicit matrix representations and direct characteristic polynomials.

This is the ground truth the factorization is checked against: build the
defining representation of each algebra from its Cartan elements and the
invariant bilinear form, derive adjoint and tensor-power representations,
compute ``det(z0 I + phi(x))`` exactly and compare with the assembled
product of orbital factors evaluated at the invariants of ``x``.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations, combinations_with_replacement
from math import lcm
from typing import Mapping, Sequence

from .errors import InvalidPower, InvalidType, Mismatch
from .exact_poly import MultiPoly
from .orbital_factor import assemble
from .root_system import LieType, build
from .weight_system import dim as weyl_dim

THREADS_ENV = "LIECHARPOLY_THREADS"

Matrix = tuple  # tuple[tuple[Fraction | int, ...], ...]


# -- small exact matrix helpers ------------------------------------------------

def zeros(n: int, m: int | None = None) -> list[list]:
    return [[0] * (n if m is None else m) for _ in range(n)]


def unit(n: int, entries: Mapping[tuple[int, int], int]) -> Matrix:
    """Matrix with the given ``{(row, col): value}`` entries (0-based) and zeros elsewhere."""
    a = zeros(n)
    for (i, j), v in entries.items():
        a[i][j] += v
    return freeze(a)


def freeze(a) -> Matrix:
    return tuple(tuple(_norm(x) for x in row) for row in a)


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return freeze([[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a])


def matadd(a: Matrix, b: Matrix, s=1) -> Matrix:
    return freeze([[x + s * y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)])


def scale(a: Matrix, c) -> Matrix:
    return freeze([[x * c for x in row] for row in a])


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def bracket(a: Matrix, b: Matrix) -> Matrix:
    return matadd(matmul(a, b), matmul(b, a), -1)


def is_zero(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def is_diagonal(a: Matrix) -> bool:
    return all(not x for i, row in enumerate(a) for j, x in enumerate(row) if i != j)


# -- representations -------------------------------------------------------------

@dataclass(frozen=True)
class MatrixRep:
    lie_type: LieType
    name: str
    dimension: int
    labels: tuple[str, ...]
    matrices: tuple[Matrix, ...]
    highest: tuple[tuple[int, ...], ...]

    @property
    def basis(self) -> dict[str, Matrix]:
        return dict(zip(self.labels, self.matrices))

    def matrix(self, x: "PencilElement") -> Matrix:
        """``phi(x)`` for a concrete element."""
        out = [[Fraction(0)] * self.dimension for _ in range(self.dimension)]
        for label, m in zip(self.labels, self.matrices):
            c = x.coefficients.get(label, 0)
            if not c:
                continue
            for i, row in enumerate(m):
                for j, v in enumerate(row):
                    if v:
                        out[i][j] += c * v
        return freeze(out)

    def cartan_labels(self) -> tuple[str, ...]:
        return tuple(f"h{i}" for i in range(1, self.lie_type.rank + 1))


@dataclass(frozen=True)
class PencilElement:
    """A concrete ``x = sum c_label * basis[label]``."""

    coefficients: Mapping[str, Fraction]

    def to_json(self) -> dict:
        return {k: str(v) for k, v in sorted(self.coefficients.items())}


def _e(n: int, i: int, j: int, v: int = 1) -> dict:
    return {(i, j): v}


def _merge(*parts: dict) -> dict:
    out: dict = {}
    for p in parts:
        for k, v in p.items():
            out[k] = out.get(k, 0) + v
    return out


def _sl_basis(n: int):
    labels, mats = [], []
    for i in range(n - 1):
        labels.append(f"h{i + 1}")
        mats.append(unit(n, _merge(_e(n, i, i), _e(n, i + 1, i + 1, -1))))
    for i in range(n):
        for j in range(n):
            if i != j:
                labels.append(f"E{i + 1},{j + 1}")
                mats.append(unit(n, _e(n, i, j)))
    return labels, mats


def _orthosymplectic_cartan(family: str, n: int):
    """Cartan elements in the block ordering; for B the index 0 is the extra coordinate."""
    off = 1 if family == "B" else 0
    dim = 2 * n + off
    mats = []
    for i in range(n - 1):
        a, b = off + i, off + i + 1
        mats.append(unit(dim, {(a, a): 1, (b, b): -1, (a + n, a + n): -1, (b + n, b + n): 1}))
    a = off + n - 1
    if family == "B":
        mats.append(unit(dim, {(a, a): 2, (a + n, a + n): -2}))
    elif family == "C":
        mats.append(unit(dim, {(a, a): 1, (a + n, a + n): -1}))
    else:
        b = a - 1
        mats.append(unit(dim, {(b, b): 1, (a, a): 1, (b + n, b + n): -1, (a + n, a + n): -1}))
    return mats


def bilinear_form(t: LieType) -> Matrix:
    n = t.rank
    if t.family == "B":
        entries = {(0, 0): 1}
        entries.update({(1 + i, 1 + n + i): 1 for i in range(n)})
        entries.update({(1 + n + i, 1 + i): 1 for i in range(n)})
        return unit(2 * n + 1, entries)
    if t.family == "C":
        entries = {(i, n + i): 1 for i in range(n)}
        entries.update({(n + i, i): -1 for i in range(n)})
        return unit(2 * n, entries)
    if t.family == "D":
        entries = {(i, n + i): 1 for i in range(n)}
        entries.update({(n + i, i): 1 for i in range(n)})
        return unit(2 * n, entries)
    raise InvalidType(f"no bilinear form recorded for {t}")


def _root_vectors(family: str, n: int):
    off = 1 if family == "B" else 0
    dim = 2 * n + off
    labels, mats = [], []
    sign = 1 if family == "C" else -1
    for i in range(n):
        for j in range(n):
            if i != j:
                a, b = off + i, off + j
                labels.append(f"X{i + 1},{j + 1}")
                mats.append(unit(dim, {(a, b): 1, (b + n, a + n): -1}))
    for i in range(n):
        for j in range(i, n):
            if i == j and family != "C":
                continue
            a, b = off + i, off + j
            labels.append(f"Y{i + 1},{j + 1}")
            mats.append(unit(dim, _merge({(a, b + n): 1}, {(b, a + n): sign})))
            labels.append(f"Z{i + 1},{j + 1}")
            mats.append(unit(dim, _merge({(a + n, b): 1}, {(b + n, a): sign})))
    if family == "B":
        for i in range(n):
            a = 1 + i
            labels.append(f"U{i + 1}")
            mats.append(unit(dim, {(0, a): 1, (a + n, 0): -1}))
            labels.append(f"V{i + 1}")
            mats.append(unit(dim, {(0, a + n): 1, (a, 0): -1}))
    return labels, mats


# The G2 element written out entry by entry; each entry is a list of (symbol, coefficient).
_G2_SYMBOLS = ("z11", "z22", "z12", "z13", "z14", "z15", "z16", "z17",
               "z25", "z27", "z34", "z43", "z52", "z64")
_G2_L = [
    [[], [("z12", -2)], [("z13", 2)], [("z14", 2)], [("z15", 2)], [("z16", -2)], [("z17", 2)]],
    [[("z16", 1)], [("z11", 1), ("z22", -1)], [("z17", 1)], [("z15", -1)], [("z25", 1)], [], [("z27", 1)]],
    [[("z15", 1)], [("z14", 1)], [("z11", -1)], [("z34", -1)], [], [("z25", 1)], [("z16", -1)]],
    [[("z17", 1)], [("z13", -1)], [("z43", 1)], [("z11", 2), ("z22", -1)], [("z16", 1)], [("z27", 1)], []],
    [[("z13", 1)], [("z52", 1)], [], [("z12", -1)], [("z11", 1)], [("z17", 1)], [("z43", -1)]],
    [[("z12", 1)], [], [("z52", 1)], [("z64", 1)], [("z14", 1)], [("z11", -1), ("z22", 1)], [("z13", -1)]],
    [[("z14", 1)], [("z64", 1)], [("z12", 1)], [], [("z34", 1)], [("z15", -1)], [("z11", -2), ("z22", 1)]],
]


def _g2_basis():
    labels, mats = [], []
    for sym in _G2_SYMBOLS:
        entries = {}
        for i, row in enumerate(_G2_L):
            for j, cell in enumerate(row):
                for s, c in cell:
                    if s == sym:
                        entries[(i, j)] = c
        label = {"z11": "h1", "z22": "h2"}.get(sym, sym)
        labels.append(label)
        mats.append(unit(7, entries))
    return labels, mats


def g2_element(values: Mapping[str, Fraction]) -> Matrix:
    """The 7x7 G2 matrix for given values of its entry symbols (``z11``, ``z22``, ``z12``...)."""
    return freeze([[sum((values.get(s, 0) * c for s, c in cell), 0) for cell in row] for row in _G2_L])


def defining_highest(t: LieType) -> tuple[int, ...]:
    if t.family == "D" and t.rank == 2:
        return (1, 1)
    return (1,) + (0,) * (t.rank - 1)


@lru_cache(maxsize=None)
def defining_rep(t: LieType | str) -> MatrixRep:
    t = LieType.parse(t)
    n = t.rank
    if t.family == "A":
        labels, mats = _sl_basis(n + 1)
        dim = n + 1
    elif t.family == "G":
        labels, mats = _g2_basis()
        dim = 7
    else:
        cart = _orthosymplectic_cartan(t.family, n)
        rl, rm = _root_vectors(t.family, n)
        labels = [f"h{i + 1}" for i in range(n)] + rl
        mats = cart + rm
        dim = len(mats[0])
    return MatrixRep(t, "defining", dim, tuple(labels), tuple(mats), (defining_highest(t),))


# -- linear algebra on spans -------------------------------------------------------

class SpanSolver:
    """Coordinates of matrices in the span of a fixed list of matrices (exact)."""

    def __init__(self, mats: Sequence[Matrix]):
        self.k = len(mats)
        cols = [[x for row in m for x in row] for m in mats]
        self.size = len(cols[0])
        # Gauss-Jordan on the transpose: find pivot entries so each basis element
        # is determined by a few matrix entries.
        a = [[Fraction(cols[b][p]) for b in range(self.k)] + [Fraction(int(p == q)) for q in range(self.size)]
             for p in range(self.size)]
        r = 0
        for c in range(self.k):
            piv = next((i for i in range(r, self.size) if a[i][c] != 0), None)
            if piv is None:
                raise ValueError("basis matrices are linearly dependent")
            a[r], a[piv] = a[piv], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.size):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            r += 1
        self._coord_rows = [[(q, v) for q, v in enumerate(row[self.k:]) if v] for row in a[:self.k]]
        self._check_rows = [[(q, v) for q, v in enumerate(row[self.k:]) if v] for row in a[self.k:]]

    def coordinates(self, m: Matrix) -> list[Fraction]:
        flat = [x for row in m for x in row]
        for row in self._check_rows:
            if sum((v * flat[q] for q, v in row), Fraction(0)) != 0:
                raise ValueError("matrix is not in the span")
        return [_norm(sum((v * flat[q] for q, v in row), Fraction(0))) for row in self._coord_rows]


def structure_constants(rep: MatrixRep) -> list[list[list]]:
    """``c[i][j][k]`` with ``[b_i, b_j] = sum_k c[i][j][k] b_k``."""
    solver = SpanSolver(rep.matrices)
    k = len(rep.matrices)
    return [[solver.coordinates(bracket(rep.matrices[i], rep.matrices[j])) for j in range(k)]
            for i in range(k)]


def _highest_roots(t: LieType) -> tuple[tuple[int, ...], ...]:
    rs = build(t)
    roots = set(rs.positive_roots)
    tops = []
    for r in rs.positive_roots:
        if all(tuple(x + (i == j) for j, x in enumerate(r)) not in roots for i in range(rs.rank)):
            tops.append(rs.root_to_weight(r))
    return tuple(tops)


@lru_cache(maxsize=None)
def adjoint_rep(t: LieType | str) -> MatrixRep:
    t = LieType.parse(t)
    base = defining_rep(t)
    c = structure_constants(base)
    k = len(base.matrices)
    # ad(b_i) sends b_j to sum_k c[i][j][k] b_k: column j holds those coordinates.
    mats = tuple(freeze([[c[i][j][r] for j in range(k)] for r in range(k)]) for i in range(k))
    return MatrixRep(t, "adjoint", k, base.labels, mats, _highest_roots(t))


def _induced_highest(base: MatrixRep, kind: str, k: int) -> tuple[tuple[int, ...], ...]:
    t = base.lie_type
    if base.name != "defining" or t.family != "A":
        return ()
    n = t.rank
    if kind == "sym":
        return ((k,) + (0,) * (n - 1),)
    if k == n + 1:
        return ((0,) * n,)
    return (tuple(int(i == k - 1) for i in range(n)),)


def induced_rep(base: MatrixRep, kind: str, k: int) -> MatrixRep:
    """``Sym^k`` or ``Ext^k`` of a representation, acting by the Leibniz rule."""
    if kind not in ("sym", "ext"):
        raise InvalidPower(f"unknown kind {kind!r}")
    d = base.dimension
    if k < 1 or (kind == "ext" and k > d):
        raise InvalidPower(f"{kind}^{k} of a {d}-dimensional representation")
    if kind == "sym":
        basis = list(combinations_with_replacement(range(d), k))
    else:
        basis = list(combinations(range(d), k))
    index = {b: i for i, b in enumerate(basis)}
    mats = []
    for m in base.matrices:
        out = [[0] * len(basis) for _ in basis]
        for col, mono in enumerate(basis):
            for p, src in enumerate(mono):
                for dst in range(d):
                    v = m[dst][src]
                    if not v:
                        continue
                    new = list(mono)
                    new[p] = dst
                    if kind == "sym":
                        key = tuple(sorted(new))
                        out[index[key]][col] += v
                    else:
                        if len(set(new)) < k:
                            continue
                        sign = _sort_sign(new)
                        out[index[tuple(sorted(new))]][col] += sign * v
        mats.append(freeze(out))
    return MatrixRep(base.lie_type, f"{kind}{k}", len(basis), base.labels, tuple(mats),
                     _induced_highest(base, kind, k))


def _sort_sign(seq: list[int]) -> int:
    sign = 1
    s = list(seq)
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] > s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                sign = -sign
    return sign


def named_rep(t: LieType | str, name: str) -> MatrixRep:
    """``defining``, ``adjoint``, ``symK`` or ``extK`` (of the defining representation)."""
    t = LieType.parse(t)
    if name == "defining":
        return defining_rep(t)
    if name == "adjoint":
        return adjoint_rep(t)
    for kind in ("sym", "ext"):
        if name.startswith(kind) and name[len(kind):].isdigit():
            rep = induced_rep(defining_rep(t), kind, int(name[len(kind):]))
            if not rep.highest:
                raise InvalidType(f"no recorded decomposition for {name} of {t}")
            return rep
    raise InvalidType(f"unknown representation {name!r}")


def check_decomposition(rep: MatrixRep) -> None:
    rs = build(rep.lie_type)
    total = sum(weyl_dim(rs, h) for h in rep.highest)
    if total != rep.dimension:
        raise AssertionError(f"{rep.name} of {rep.lie_type}: highest weights give dimension {total}, "
                             f"matrices have {rep.dimension}")


# -- univariate polynomials as dense coefficient lists (constant term first) -------

def _ptrim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _ptrim(out)


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _pdiv_exact(a: list, b: list) -> list:
    a = list(a)
    if not a:
        return []
    db, lead = len(b) - 1, b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        if c:
            if c % lead:
                raise ArithmeticError("inexact Bareiss step")
            c //= lead
            q[k] = c
            for j, y in enumerate(b):
                a[k + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact Bareiss step")
    return _ptrim(q)


def det_pencil(m: Matrix) -> list:
    """Coefficients of ``det(z0 I + m)`` (constant term first) by Bareiss elimination."""
    n = len(m)
    if n == 0:
        return [1]
    d = reduce(lcm, (x.denominator for row in m for x in row if isinstance(x, Fraction)), 1)
    # det(z0 I + m) = d^-n det(d z0 I + d m): the scaled matrix has integer entries.
    a = [[_ptrim([int(m[i][j] * d)] + ([d] if i == j else [])) for j in range(n)] for i in range(n)]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return []
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _pdiv_exact(_psub(_pmul(a[i][j], a[k][k]), _pmul(a[i][k], a[k][j])), prev)
        prev = a[k][k]
    det = [sign * c for c in a[n - 1][n - 1]]
    inv = Fraction(1, d ** n)
    return [_norm(c * inv) for c in det]


def _to_poly(coeffs: list, var: str = "z0") -> MultiPoly:
    return MultiPoly.from_terms(({var: k}, c) for k, c in enumerate(coeffs) if c)


def char_poly(rep: MatrixRep, x: PencilElement) -> MultiPoly:
    """``det(z0 I + phi(x))`` as a polynomial in ``z0``."""
    return _to_poly(det_pencil(rep.matrix(x)))


def det(m: Matrix):
    """Determinant of a constant matrix (fraction-free elimination)."""
    coeffs = det_pencil(m)
    return coeffs[0] if coeffs else 0


# -- Pfaffians ---------------------------------------------------------------------

def pfaffian(m: Matrix):
    """Pfaffian of a skew-symmetric matrix by Schur-complement elimination."""
    n = len(m)
    if n % 2:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    idx = list(range(n))
    while idx:
        k = idx[0]
        piv = next((j for j in idx[1:] if a[k][j] != 0), None)
        if piv is None:
            return 0
        rest = [j for j in idx[1:] if j != piv]
        # moving piv next to k is a transposition of the remaining order unless it already is
        if idx[1] != piv:
            result = -result
        p = a[k][piv]
        result *= p
        for i in rest:
            for j in rest:
                a[i][j] += (a[piv][i] * a[k][j] - a[k][i] * a[piv][j]) / p
        idx = rest
    return _norm(result)


def pfaffian_expansion(m: Matrix):
    """Pfaffian by expansion along the first row (exponential; an oracle for small sizes)."""
    n = len(m)
    if n == 0:
        return 1
    if n % 2:
        return 0
    total = 0
    for j in range(1, n):
        if m[0][j]:
            keep = [r for r in range(n) if r not in (0, j)]
            minor = tuple(tuple(m[r][c] for c in keep) for r in keep)
            total += (-1) ** (j + 1) * m[0][j] * pfaffian_expansion(minor)
    return _norm(total)


# -- generator values ------------------------------------------------------------

@lru_cache(maxsize=None)
def _pfaffian_calibration(t: LieType):
    """``Pf(J H)`` for the Cartan element with all thetas equal to one."""
    from .eigen_map import scheme
    rep = defining_rep(t)
    sch = scheme(t)
    c = [sum(row, Fraction(0)) for row in sch.matrix]
    x = PencilElement({f"h{i + 1}": c[i] for i in range(t.rank)})
    return pfaffian(matmul(bilinear_form(t), rep.matrix(x)))


def generator_values(t: LieType | str, x: PencilElement) -> dict[str, Fraction]:
    """Invariant generators of ``x`` read from its defining representation."""
    t = LieType.parse(t)
    rep = defining_rep(t)
    mat = rep.matrix(x)
    coeffs = det_pencil(mat)

    def coef(k: int):
        return coeffs[k] if k < len(coeffs) else 0

    n = t.rank
    if t.family == "A":
        return {f"e{k}": coef(n + 1 - k) for k in range(2, n + 2)}
    if t.family == "B":
        return {f"sb{j}": (-1) ** j * coef(2 * n - 2 * j + 1) for j in range(1, n + 1)}
    if t.family in ("C", "D"):
        sb = {f"sb{j}": (-1) ** j * coef(2 * n - 2 * j) for j in range(1, n + 1)}
        if t.family == "C":
            return sb
        sb.pop(f"sb{n}")
        sb["t"] = _norm(Fraction(pfaffian(matmul(bilinear_form(t), mat))) / _pfaffian_calibration(t))
        return sb
    # det(z0 + L) = z0 (z0^6 - sb1 z0^4 + sb2 z0^2 - sb3) with sb1 = -2 g2, sb3 = g6
    return {"g2": _norm(Fraction(coef(5)) / 2), "g6": -coef(1)}


# -- random points and verification ----------------------------------------------

def random_pencil(rep: MatrixRep, rng: random.Random, bound: int = 7) -> PencilElement:
    """Random small rationals per basis label, rejecting points with repeated defining eigenvalues."""
    base = defining_rep(rep.lie_type)
    while True:
        coeffs = {}
        for label in rep.labels:
            num = rng.randint(-bound, bound)
            coeffs[label] = _norm(Fraction(num, rng.randint(1, bound)))
        x = PencilElement(coeffs)
        if _generic(base, x):
            return x


def _generic(base: MatrixRep, x: PencilElement) -> bool:
    p = det_pencil(base.matrix(x))
    # strip the z0 factor forced for odd orthogonal dimensions and for G2
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
    dp = _ptrim([k * c for k, c in enumerate(p)][1:])
    return len(_pgcd(p, dp)) <= 1


def _pgcd(a: list, b: list) -> list:
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b:
        while len(a) >= len(b) and a:
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, y in enumerate(b):
                a[shift + i] -= f * y
            _ptrim(a)
        a, b = b, a
    return a


def verify(rep: MatrixRep, highest: Sequence[Sequence[int]] | None, x: PencilElement) -> dict:
    """Compare ``det(z0 I + phi(x))`` with the assembled factorization at ``x``.

    Returns a report dict; raises :class:`Mismatch` on the first differing coefficient.
    """
    highest = tuple(tuple(h) for h in (highest if highest is not None else rep.highest))
    t = rep.lie_type
    rs = build(t)
    total = sum(weyl_dim(rs, h) for h in highest)
    if total != rep.dimension:
        raise Mismatch(f"highest weights {highest} give dimension {total}, representation has {rep.dimension}")
    fac = assemble(rs, highest)
    values = generator_values(t, x)
    expected = fac.at(values)
    actual = char_poly(rep, x)
    if expected != actual:
        for k in range(rep.dimension, -1, -1):
            e, a = expected.coefficient({"z0": k}), actual.coefficient({"z0": k})
            if e != a:
                raise Mismatch(f"coefficient of z0^{k}: factorization {e}, determinant {a}",
                               exponent=k, expected=e, actual=a)
    return {
        "type": str(t),
        "rep": rep.name,
        "highest": [list(h) for h in highest],
        "factor_degrees": [[list(f.mu), f.degree, m] for f, m in fac.factors],
        "degree": fac.degree,
        "passed": True,
    }


def _verify_one(args) -> dict:
    rep, highest, i, x = args
    try:
        r = verify(rep, highest, x)
    except Mismatch as exc:
        r = {"type": str(rep.lie_type), "rep": rep.name, "passed": False, "detail": str(exc),
             "exponent": exc.exponent}
    r["point"] = i
    r["element"] = x.to_json()
    return r


def worker_count() -> int:
    """Process count for independent verification points, from ``LIECHARPOLY_THREADS``."""
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def verify_points(rep: MatrixRep, points: int, seed: int,
                  highest: Sequence[Sequence[int]] | None = None,
                  workers: int | None = None) -> list[dict]:
    """Run :func:`verify` at ``points`` random elements; mismatches are recorded, not raised.

    Points are drawn up front from ``seed``, so the report does not depend on
    how many worker processes evaluate them.
    """
    rng = random.Random(seed)
    jobs = [(rep, highest, i, random_pencil(rep, rng)) for i in range(points)]
    workers = worker_count() if workers is None else workers
    if workers > 1 and points > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_verify_one, jobs))
    return [_verify_one(job) for job in jobs]
