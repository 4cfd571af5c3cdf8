"""Eigenvalue coordinates: how a weight evaluates on a diagonalized Cartan element.

A generic element of the algebra is conjugate to a Cartan element whose
coordinates ``c_i(theta)`` in the basis ``H_1..H_rank`` are linear in the
eigenvalue parameters ``theta``. A weight ``w`` then contributes the linear
form ``v(w, theta) = sum_i c_i(theta) * w_i``.

For A and G2 the parameters satisfy ``theta_1 + ... + theta_n = 0``. Besides
the normal forms we keep "projected" forms that agree with them on that
hyperplane but are built from ``theta_k - e1/n``; the Weyl group acts on the
projected forms by honest permutations (and sign changes) of the thetas even
off the hyperplane, which is what the symmetric-function reduction needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import IndexOutOfRange
from .exact_poly import MultiPoly
from .root_system import LieType, RootSystem, build


def theta_names(k: int) -> tuple[str, ...]:
    return tuple(f"theta{j}" for j in range(1, k + 1))


def _linear(coeffs: Sequence[Fraction]) -> MultiPoly:
    return MultiPoly.from_terms(({f"theta{j + 1}": 1}, c) for j, c in enumerate(coeffs) if c)


@dataclass(frozen=True)
class EigenCoordinateScheme:
    lie_type: LieType
    num_thetas: int
    # rank x num_thetas rational coefficient matrices
    matrix: tuple[tuple[Fraction, ...], ...]
    projected_matrix: tuple[tuple[Fraction, ...], ...]
    constrained: bool

    @property
    def thetas(self) -> tuple[str, ...]:
        return theta_names(self.num_thetas)

    @property
    def cartan_forms(self) -> tuple[MultiPoly, ...]:
        return tuple(_linear(row) for row in self.matrix)

    @property
    def projected_forms(self) -> tuple[MultiPoly, ...]:
        return tuple(_linear(row) for row in self.projected_matrix)

    @property
    def constraint(self) -> MultiPoly | None:
        """The linear form required to vanish, if any."""
        if not self.constrained:
            return None
        return _linear([Fraction(1)] * self.num_thetas)

    def coefficients(self, w: Sequence, projected: bool = False) -> list:
        """Coefficients of ``v(w, theta)`` on ``theta_1..theta_n``."""
        m = self.projected_matrix if projected else self.matrix
        out = []
        for j in range(self.num_thetas):
            acc = 0
            for i, x in enumerate(w):
                c = m[i][j]
                if c and (not isinstance(x, int) or x):
                    acc = acc + x * c
            out.append(acc.numerator if isinstance(acc, Fraction) and acc.denominator == 1 else acc)
        return out

    def value(self, w: Sequence[int], theta: Sequence, projected: bool = False):
        """``v(w, theta)`` at concrete theta values."""
        return sum((c * t for c, t in zip(self.coefficients(w, projected), theta)), 0)

    def theta_action(self, i: int) -> Callable[[Sequence], tuple]:
        """The permutation/sign action ``sigma_i`` on theta tuples (1-based ``i``)."""
        return _action(self.lie_type, i)

    def theta_rules(self, i: int) -> dict[str, MultiPoly]:
        """``sigma_i`` as a substitution on the theta variables."""
        thetas = [MultiPoly.variable(v) for v in self.thetas]
        image = self.theta_action(i)(thetas)
        return {v: p for v, p in zip(self.thetas, image)}


def _partial_sum_rows(n: int, k: int) -> list[list[Fraction]]:
    """Rows ``theta_1 + ... + theta_i`` for i = 1..k over n thetas."""
    return [[Fraction(int(j <= i)) for j in range(n)] for i in range(k)]


@lru_cache(maxsize=None)
def _scheme(t: LieType) -> EigenCoordinateScheme:
    n = t.rank
    half = Fraction(1, 2)
    if t.family == "A":
        k = n + 1
        rows = _partial_sum_rows(k, n)
        proj = [[x - Fraction(i + 1, k) for x in row] for i, row in enumerate(rows)]
        return EigenCoordinateScheme(t, k, _freeze(rows), _freeze(proj), True)
    if t.family == "B":
        rows = _partial_sum_rows(n, n - 1) + [[half] * n]
    elif t.family == "C":
        rows = _partial_sum_rows(n, n)
    elif t.family == "D":
        rows = _partial_sum_rows(n, n - 2)
        rows.append([half] * (n - 1) + [-half])
        rows.append([half] * n)
    else:
        rows = [[Fraction(0), Fraction(-1), Fraction(-1)], [Fraction(1), Fraction(0), Fraction(-1)]]
        proj = [[Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)], rows[1]]
        return EigenCoordinateScheme(t, 3, _freeze(rows), _freeze(proj), True)
    return EigenCoordinateScheme(t, n, _freeze(rows), _freeze(rows), False)


def _freeze(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def scheme(t: LieType | RootSystem | str) -> EigenCoordinateScheme:
    if isinstance(t, RootSystem):
        t = t.lie_type
    return _scheme(LieType.parse(t))


def _action(t: LieType, i: int) -> Callable[[Sequence], tuple]:
    n = t.rank
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"reflection index {i} outside 1..{n}")

    def swap(a: int, b: int):
        def act(th):
            th = list(th)
            th[a], th[b] = th[b], th[a]
            return tuple(th)
        return act

    if t.family == "G":
        if i == 1:
            return lambda th: (-th[2], -th[1], -th[0])
        return swap(1, 2)
    if i < n or t.family == "A":
        return swap(i - 1, i)
    if t.family in ("B", "C"):
        def negate_last(th):
            return tuple(th[:-1]) + (-th[-1],)
        return negate_last

    def d_last(th):
        return tuple(th[:-2]) + (-th[-1], -th[-2])
    return d_last


def eigen_form(sch: EigenCoordinateScheme, w: Sequence, projected: bool = False) -> MultiPoly:
    """``v(w, theta) = sum_i c_i(theta) w_i`` as a polynomial linear in theta.

    Coordinates of ``w`` may be integers or polynomials (symbolic weights).
    """
    acc = MultiPoly()
    for name, c in zip(sch.thetas, sch.coefficients(w, projected)):
        if isinstance(c, MultiPoly):
            if c:
                acc = acc + c * MultiPoly.variable(name)
        elif c:
            acc = acc + MultiPoly.from_terms([({name: 1}, c)])
    return acc


def scheme_for(name: str) -> EigenCoordinateScheme:
    return scheme(build(name))
