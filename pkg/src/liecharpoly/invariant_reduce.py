"""Rewrite Weyl-invariant polynomials in theta through invariant-ring generators.

Generators per family (``n`` thetas):

* A: ``e2..en``, the elementary symmetric polynomials, with ``e1 = 0``.
* B, C: ``sb1..sbn`` where ``sbk = e_k(theta_1^2, ..., theta_n^2)``.
* D: ``sb1..sb(n-1)`` and ``t = theta_1 * ... * theta_n`` (so ``sbn = t^2``).
* G2: ``g2 = e2(theta)`` and ``g6 = e3(theta)^2`` on ``theta_1 + theta_2 + theta_3 = 0``.

Variables other than the thetas are treated as coefficients and pass
through untouched, so a polynomial in ``z0``, ``theta`` and ``l`` reduces to
one in ``z0``, the generators and ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .eigen_map import theta_names
from .errors import MixedParity, NotInvariant, NotSymmetric, OddE3
from .exact_poly import MultiPoly, product
from .root_system import LieType


def _theta_count(p: MultiPoly) -> int:
    idx = [int(v[5:]) for v in p.variables if v.startswith("theta") and v[5:].isdigit()]
    return max(idx, default=0)


def elementary(names, k: int) -> MultiPoly:
    """``e_k`` of the given variables."""
    if k == 0:
        return MultiPoly(1)
    return MultiPoly.from_terms(({v: 1 for v in c}, 1) for c in combinations(names, k))


@lru_cache(maxsize=None)
def _e_polys(n: int) -> tuple[MultiPoly, ...]:
    names = theta_names(n)
    return tuple(elementary(names, k) for k in range(1, n + 1))


@lru_cache(maxsize=None)
def _subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=8192)
def _e_product(n: int, b: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Coefficients of ``prod e_i^b_i`` on the partition-shaped monomials.

    Built one factor ``e_j`` at a time. Only partition exponents are stored;
    the coefficient of any other monomial is read off its sorted exponent,
    which is legitimate because every intermediate product is symmetric.
    """
    if not any(b):
        return {(0,) * n: 1}
    j = max(i for i, x in enumerate(b) if x)
    prev = _e_product(n, b[:j] + (b[j] - 1,) + b[j + 1:])
    subsets = _subsets(n, j + 1)
    targets = set()
    for mu in prev:
        for s in subsets:
            lam = list(mu)
            for i in s:
                lam[i] += 1
            targets.add(tuple(sorted(lam, reverse=True)))
    out = {}
    for lam in targets:
        total = 0
        for s in subsets:
            alpha = list(lam)
            for i in s:
                alpha[i] -= 1
            if min(alpha) >= 0:
                total += prev.get(tuple(sorted(alpha, reverse=True)), 0)
        if total:
            out[lam] = total
    return out


def _swap_rules(names, i: int) -> dict[str, MultiPoly]:
    return {names[i]: MultiPoly.variable(names[i + 1]), names[i + 1]: MultiPoly.variable(names[i])}


def check_symmetric(p: MultiPoly, n: int) -> None:
    names = theta_names(n)
    for i in range(n - 1):
        if p.substitute(_swap_rules(names, i)) != p:
            raise NotSymmetric(f"not invariant under theta{i + 1} <-> theta{i + 2}", (i + 1, i + 2))


def reduce_symmetric(p: MultiPoly, n: int | None = None, prefix: str = "e",
                     check: bool = True) -> MultiPoly:
    """Express a symmetric polynomial in ``theta1..thetan`` through ``e1..en``."""
    if n is None:
        n = _theta_count(p)
    if check:
        check_symmetric(p, n)
    names = theta_names(n)
    extra = [v for v in p.variables if v.startswith("theta") and v not in names]
    if extra:
        raise NotInvariant(f"variables {extra} beyond theta{n}")
    groups = {k: c for k, c in p.collect(names).items()
              if all(k[i] >= k[i + 1] for i in range(n - 1))}
    result: dict[tuple[int, ...], MultiPoly] = {}
    while groups:
        lead = max(groups)
        coef = groups[lead]
        b = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
        result[b] = coef
        for k, c in _e_product(n, b).items():
            new = groups.get(k, MultiPoly()) - coef * c
            if new:
                groups[k] = new
            else:
                groups.pop(k, None)
        if lead in groups:
            raise AssertionError("leading term did not cancel")
    gens = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    return MultiPoly.from_collected(gens, result)


def _halve_theta_exponents(p: MultiPoly, names) -> MultiPoly:
    groups = {}
    for k, c in p.collect(names).items():
        if any(x % 2 for x in k):
            raise NotInvariant("odd theta exponent in a sign-invariant polynomial")
        groups[tuple(x // 2 for x in k)] = c
    return MultiPoly.from_collected(names, groups)


def _rename(p: MultiPoly, n: int, old: str, new: str) -> MultiPoly:
    return p.rename({f"{old}{i}": f"{new}{i}" for i in range(1, n + 1)})


def _check_rules(p: MultiPoly, rules: dict[str, MultiPoly], what: str) -> None:
    if p.substitute(rules) != p:
        raise NotInvariant(f"not invariant under {what}")


def reduce_bc(p: MultiPoly, n: int | None = None, check: bool = True) -> MultiPoly:
    """Invariants of permutations and sign changes, through ``sb1..sbn``."""
    if n is None:
        n = _theta_count(p)
    names = theta_names(n)
    if check:
        check_symmetric(p, n)
        if n:
            _check_rules(p, {names[-1]: -MultiPoly.variable(names[-1])}, f"theta{n} -> -theta{n}")
    u = _halve_theta_exponents(p, names)
    return _rename(reduce_symmetric(u, n, check=False), n, "e", "sb")


def reduce_d(p: MultiPoly, n: int | None = None, check: bool = True) -> MultiPoly:
    """Invariants of permutations and even sign changes, through ``sb1..sb(n-1), t``."""
    if n is None:
        n = _theta_count(p)
    names = theta_names(n)
    if check:
        check_symmetric(p, n)
        if n >= 2:
            a, b = names[-2], names[-1]
            _check_rules(p, {a: -MultiPoly.variable(b), b: -MultiPoly.variable(a)},
                         f"(theta{n - 1}, theta{n}) -> (-theta{n}, -theta{n - 1})")
    even, odd = {}, {}
    for k, c in p.collect(names).items():
        parities = {x % 2 for x in k}
        if parities == {0}:
            even[k] = c
        elif parities == {1}:
            odd[tuple(x - 1 for x in k)] = c
        else:
            raise MixedParity(f"monomial with exponents {k} mixes parities")
    p0 = reduce_bc(MultiPoly.from_collected(names, even), n, check=False)
    p1 = reduce_bc(MultiPoly.from_collected(names, odd), n, check=False)
    out = p0 + MultiPoly.variable("t") * p1
    return out.substitute({f"sb{n}": MultiPoly.variable("t") ** 2})


def check_g2(p: MultiPoly) -> None:
    check_symmetric(p, 3)
    t1, t2, t3 = (MultiPoly.variable(v) for v in theta_names(3))
    _check_rules(p, {"theta1": -t1, "theta2": -t2, "theta3": -t3}, "theta -> -theta")


def reduce_g2(p: MultiPoly, check: bool = True) -> MultiPoly:
    """Invariants of S3 x {+-1} on the plane ``e1 = 0``, through ``g2, g6``."""
    if check:
        check_g2(p)
    q = reduce_symmetric(p, 3, check=False).substitute({"e1": 0})
    groups = {}
    for (e2, e3), c in q.collect(("e2", "e3")).items():
        if e3 % 2:
            raise OddE3("odd power of e3 survives")
        groups[(e2, e3 // 2)] = c
    return MultiPoly.from_collected(("g2", "g6"), groups)


def reduce_a(p: MultiPoly, n: int | None = None, check: bool = True) -> MultiPoly:
    """Symmetric polynomials restricted to ``e1 = 0``, through ``e2..en``."""
    return reduce_symmetric(p, n, check=check).substitute({"e1": 0})


@dataclass(frozen=True)
class GeneratorSet:
    lie_type: LieType
    names: tuple[str, ...]
    degrees: tuple[int, ...]
    num_thetas: int

    @property
    def weights(self) -> dict[str, int]:
        return dict(zip(self.names, self.degrees))

    def definitions(self) -> dict[str, MultiPoly]:
        """Each generator as a polynomial in the (unconstrained) thetas."""
        n = self.num_thetas
        th = theta_names(n)
        f = self.lie_type.family
        if f == "A":
            return {f"e{k}": elementary(th, k) for k in range(2, n + 1)}
        squares = [MultiPoly.variable(v) ** 2 for v in th]
        sq = {f"sb{k}": _elementary_of(squares, k) for k in range(1, n + 1)}
        if f in ("B", "C"):
            return sq
        if f == "D":
            out = {k: v for k, v in sq.items() if k != f"sb{n}"}
            out["t"] = product(MultiPoly.variable(v) for v in th)
            return out
        return {"g2": elementary(th, 2), "g6": elementary(th, 3) ** 2}

    def lift(self, p: MultiPoly) -> MultiPoly:
        """Substitute the generator definitions back into ``p``."""
        return p.substitute(self.definitions())


def _elementary_of(polys, k: int) -> MultiPoly:
    total = MultiPoly()
    for c in combinations(polys, k):
        total = total + product(c)
    return total


def generator_set(t: LieType) -> GeneratorSet:
    n = t.rank
    if t.family == "A":
        return GeneratorSet(t, tuple(f"e{k}" for k in range(2, n + 2)), tuple(range(2, n + 2)), n + 1)
    if t.family in ("B", "C"):
        return GeneratorSet(t, tuple(f"sb{k}" for k in range(1, n + 1)),
                            tuple(2 * k for k in range(1, n + 1)), n)
    if t.family == "D":
        return GeneratorSet(t, tuple(f"sb{k}" for k in range(1, n)) + ("t",),
                            tuple(2 * k for k in range(1, n)) + (n,), n)
    return GeneratorSet(t, ("g2", "g6"), (2, 6), 3)


def reduce_for_type(t: LieType, p: MultiPoly, check: bool = True) -> MultiPoly:
    """Dispatch to the reducer of the family of ``t``."""
    f = t.family
    if f == "A":
        return reduce_a(p, t.rank + 1, check=check)
    if f in ("B", "C"):
        return reduce_bc(p, t.rank, check=check)
    if f == "D":
        return reduce_d(p, t.rank, check=check)
    return reduce_g2(p, check=check)


def check_invariant(t: LieType, p: MultiPoly) -> None:
    """Raise :class:`NotInvariant` unless ``p`` is fixed by the theta-action of the Weyl group."""
    f, n = t.family, t.rank
    if f == "A":
        check_symmetric(p, n + 1)
    elif f in ("B", "C"):
        check_symmetric(p, n)
        last = f"theta{n}"
        _check_rules(p, {last: -MultiPoly.variable(last)}, f"{last} -> -{last}")
    elif f == "D":
        check_symmetric(p, n)
        if n >= 2:
            a, b = theta_names(n)[-2:]
            _check_rules(p, {a: -MultiPoly.variable(b), b: -MultiPoly.variable(a)}, "the last D reflection")
    else:
        check_g2(p)


def latex_names(t: LieType) -> dict[str, str]:
    """LaTeX names in the customary notation (``p, q`` for sl(3), ``s_k`` and ``\\bar s_k``)."""
    n = t.rank
    names = {f"l{k}": f"l_{{{k}}}" for k in range(1, n + 1)}
    if t.family == "A":
        if n == 2:
            names.update({"e2": "p", "e3": "q"})
        else:
            names.update({f"e{k}": f"s_{{{k}}}" for k in range(2, n + 2)})
    else:
        names.update({f"sb{k}": rf"\bar{{s}}_{{{k}}}" for k in range(1, n + 1)})
        names.update({"g2": "g_{2}", "g6": "g_{6}", "t": "t"})
    return names


def g2_to_sbar(p: MultiPoly) -> MultiPoly:
    """Rewrite ``g2, g6`` through the (dependent) triple ``sb1 = -2 g2``, ``sb3 = g6``."""
    return p.substitute({"g2": MultiPoly.variable("sb1") * Fraction(-1, 2),
                         "g6": MultiPoly.variable("sb3")})
