"""Orbital factors and the assembled characteristic polynomial.

For a dominant weight ``mu`` the orbital factor is

    f_mu = prod over w in W.mu of (z0 + v(w, theta)),

rewritten through the invariant generators of the type. The characteristic
polynomial det(z0 I + phi(L)) of a module is the product of the ``f_mu`` of
its dominant weights, each raised to the weight multiplicity.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

from .eigen_map import eigen_form, scheme
from .errors import NotDivisible, NotDominant
from .exact_poly import MultiPoly, product
from .invariant_reduce import generator_set, latex_names, reduce_for_type
from .root_system import LieType, RootSystem, build
from .weight_system import _freudenthal, character_by_orbit, dim
from .weyl_orbit import dominant_representative, is_dominant, orbit

Z0 = MultiPoly.variable("z0")


@dataclass(frozen=True)
class OrbitalFactor:
    lie_type: LieType
    mu: tuple
    poly: MultiPoly
    degree: int
    symbolic: bool = False

    def at(self, values: Mapping[str, Fraction | int]) -> MultiPoly:
        """Specialize generators (and ``l``-variables) to numbers, leaving ``z0``."""
        return self.poly.substitute({k: v for k, v in values.items() if k != "z0"})

    def to_json(self) -> dict:
        return {
            "type": str(self.lie_type),
            "mu": [str(x) for x in self.mu] if self.symbolic else list(self.mu),
            "degree": self.degree,
            "poly": self.poly.to_json(),
        }

    def to_latex(self, names: Mapping[str, str] | None = None) -> str:
        return self.poly.to_latex(names if names is not None else latex_names(self.lie_type))


@dataclass(frozen=True)
class FactoredCharPoly:
    lie_type: LieType
    highest: tuple[tuple[int, ...], ...]
    factors: tuple[tuple[OrbitalFactor, int], ...]

    @property
    def degree(self) -> int:
        return sum(f.degree * m for f, m in self.factors)

    def expand(self) -> MultiPoly:
        return product(f.poly ** m for f, m in self.factors)

    def at(self, values: Mapping[str, Fraction | int]) -> MultiPoly:
        """The full product with generators specialized, as a polynomial in ``z0``."""
        return product(f.at(values) ** m for f, m in self.factors)

    def to_json(self, expand: bool = False) -> dict:
        out = {
            "type": str(self.lie_type),
            "highest": [list(h) for h in self.highest],
            "degree": self.degree,
            "factors": [{"mu": list(f.mu), "degree": f.degree, "multiplicity": m,
                         "poly": f.poly.to_json()} for f, m in self.factors],
        }
        if expand:
            out["expanded"] = self.expand().to_json()
        return out


def _as_root_system(rs: RootSystem | LieType | str) -> RootSystem:
    return rs if isinstance(rs, RootSystem) else build(rs)


def symbolic_weight(mu: Sequence[int]) -> tuple:
    """Replace each nonzero coordinate ``i`` by the variable ``l{i}``."""
    return tuple(MultiPoly.variable(f"l{i + 1}") if x else 0 for i, x in enumerate(mu))


def orbit_forms(rs: RootSystem, mu: Sequence[int], symbolic: bool = False,
                projected: bool = True) -> list[MultiPoly]:
    """``v(w, theta)`` for every ``w`` in the orbit of the dominant weight ``mu``."""
    sch = scheme(rs)
    orb = orbit(rs, mu)
    if not symbolic:
        return [eigen_form(sch, w, projected) for w in orb.elements]
    sym = symbolic_weight(orb.dominant)
    return [eigen_form(sch, rs.apply_word(orb.witness_words[w], sym), projected)
            for w in orb.elements]


def orbit_product(forms: Iterable[MultiPoly]) -> MultiPoly:
    """``prod (z0 + v)``, pairing ``v`` with ``-v`` into ``z0^2 - v^2`` where possible."""
    pending = Counter(forms)
    total = sum(pending.values())
    # Clear denominators: prod (z0 + v) = D^-N prod (D z0 + D v) keeps the
    # expansion in integer arithmetic.
    d = 1
    for v in pending:
        for _, c in v.terms():
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
    z = Z0 * d
    leaves = []
    for v in list(pending):
        while pending[v] > 0:
            pending[v] -= 1
            neg = -v
            dv = v * d
            if v and pending.get(neg, 0) > 0:
                pending[neg] -= 1
                leaves.append(z * z - dv * dv)
            else:
                leaves.append(z + dv)
    # Leaves have degree <= 2 and the product is dense in theta, so folding
    # them in one at a time beats a balanced tree (whose top multiplications
    # are quadratic in the term count).
    out = MultiPoly(1)
    for leaf in leaves:
        out = out * leaf
    return out if d == 1 else out.scale(Fraction(1, d ** total))


@lru_cache(maxsize=64)
def _raw_product(t: LieType, mu: tuple[int, ...], symbolic: bool) -> MultiPoly:
    return orbit_product(orbit_forms(build(t), mu, symbolic))


@lru_cache(maxsize=512)
def _orbital_factor(t: LieType, mu: tuple[int, ...], symbolic: bool) -> OrbitalFactor:
    rs = build(t)
    raw = _raw_product(t, mu, symbolic)
    poly = reduce_for_type(t, raw)
    size = len(orbit(rs, mu))
    if poly.degree("z0") != size or poly.coefficient({"z0": size}) != 1:
        raise AssertionError(f"orbital factor of {mu} is not monic of degree {size}")
    return OrbitalFactor(t, mu, poly, size, symbolic)


def orbital_factor(rs: RootSystem | LieType | str, mu: Sequence[int],
                   symbolic: bool = False) -> OrbitalFactor:
    """The orbital factor of a dominant weight.

    With ``symbolic=True`` every nonzero coordinate ``mu_i`` is replaced by an
    indeterminate ``l_i`` (only the zero pattern of ``mu`` matters).
    """
    rs = _as_root_system(rs)
    mu = tuple(mu)
    if len(mu) != rs.rank:
        raise ValueError(f"weight {mu} does not have length {rs.rank}")
    if not is_dominant(mu):
        raise NotDominant(f"{mu} is not dominant")
    if symbolic:
        mu = tuple(int(bool(x)) for x in mu)
    return _orbital_factor(rs.lie_type, mu, symbolic)


def raw_orbital_product(rs: RootSystem, mu: Sequence[int], theta_action=None) -> MultiPoly:
    """The unreduced product in theta, optionally with theta moved by a reflection."""
    dom, _ = dominant_representative(rs, mu)
    raw = _raw_product(rs.lie_type, dom, False)
    if theta_action is not None:
        raw = raw.substitute(theta_action)
    return raw


def assemble(rs: RootSystem | LieType | str, highest: Iterable[Sequence[int]]) -> FactoredCharPoly:
    """Factor the characteristic polynomial of the direct sum of the V(lambda)."""
    rs = _as_root_system(rs)
    highest = tuple(tuple(h) for h in highest)
    mult: dict[tuple[int, ...], int] = {}
    for lam in highest:
        for mu, _, m in character_by_orbit(rs, lam).entries:
            mult[mu] = mult.get(mu, 0) + m
    factors = tuple((orbital_factor(rs, mu), m) for mu, m in mult.items())
    return FactoredCharPoly(rs.lie_type, highest, factors)


# -- the division route -------------------------------------------------------

SYMBOLIC_DIVISION_LIMIT = 20000


def _division_cost(rs: RootSystem, lam: tuple[int, ...]) -> int:
    nvars = scheme(rs).num_thetas + 1
    return comb(dim(rs, lam) + nvars - 1, nvars - 1)


def _module_forms(rs: RootSystem, lam: tuple[int, ...]) -> list[MultiPoly]:
    """``v(nu, theta)`` for every weight ``nu`` of V(lam), repeated by multiplicity."""
    forms = []
    for mu, m in _freudenthal(rs, lam).items():
        forms.extend(orbit_forms(rs, mu) * m)
    return forms


def factor_by_division(rs: RootSystem | LieType | str, lam: Sequence[int],
                       points: int = 3, seed: int = 0) -> OrbitalFactor:
    """Recover ``f_lam`` as ``f_V(lam) / g_lam`` with ``g_lam`` the lower orbital factors.

    Small modules are divided symbolically in theta: the weight-by-weight
    product over V(lam) is divided by the lifted lower factors and the
    quotient is reduced. For large modules the identity is established at
    random rational theta points (see :func:`factor_by_division_at`) and
    ``orbital_factor(lam)`` is returned once every point agrees.
    """
    rs = _as_root_system(rs)
    lam = tuple(lam)
    lower = [(mu, m) for mu, m in _freudenthal(rs, lam).items() if mu != lam]
    if _division_cost(rs, lam) <= SYMBOLIC_DIVISION_LIMIT:
        full = orbit_product(_module_forms(rs, lam))
        lift = projected_definitions(rs.lie_type)
        g = product(orbital_factor(rs, mu).poly.substitute(lift) ** m for mu, m in lower)
        quotient = full.exact_div_monic(g) if g != 1 else full
        poly = reduce_for_type(rs.lie_type, quotient)
        return OrbitalFactor(rs.lie_type, lam, poly, poly.degree("z0"))
    rng = random.Random(seed)
    target = orbital_factor(rs, lam)
    for _ in range(points):
        theta = random_theta(rs, rng)
        q = factor_by_division_at(rs, lam, theta)
        expected = target.at(generator_values_from_theta(rs.lie_type, theta))
        if q != expected:
            raise NotDivisible(f"division route disagrees with the orbital factor of {lam} at {theta}")
    return target


@lru_cache(maxsize=None)
def projected_definitions(t: LieType) -> dict[str, MultiPoly]:
    """Generator definitions in the thetas moved onto the trace-zero plane.

    For A and G2 the orbit products are built from projected forms, which are
    the normal forms evaluated at ``theta_k - e1/n``; lifting a reduced factor
    through these definitions reproduces the raw product exactly.
    """
    sch = scheme(t)
    defs = generator_set(t).definitions()
    if not sch.constrained:
        return defs
    n = sch.num_thetas
    mean = sum((MultiPoly.variable(v) for v in sch.thetas), MultiPoly()) * Fraction(1, n)
    shift = {v: MultiPoly.variable(v) - mean for v in sch.thetas}
    return {k: d.substitute(shift) for k, d in defs.items()}


def random_theta(rs: RootSystem, rng: random.Random, bound: int = 50) -> tuple[int, ...]:
    """Distinct nonzero even integer thetas, summing to zero where the type requires it.

    Even integers keep every eigenvalue ``v(w, theta)`` integral (the B and D
    forms carry halves), so the univariate products stay in integer arithmetic.
    """
    sch = scheme(rs)
    n = sch.num_thetas
    while True:
        th = [2 * rng.randint(-bound, bound) for _ in range(n)]
        if sch.constrained:
            th[-1] = -sum(th[:-1])
        if all(th) and len({abs(x) for x in th}) == n:
            return tuple(th)


def generator_values_from_theta(t: LieType, theta: Sequence[Fraction]) -> dict[str, Fraction]:
    gens = generator_set(t)
    assignment = {f"theta{j + 1}": x for j, x in enumerate(theta)}
    return {name: poly.eval(assignment) for name, poly in gens.definitions().items()}


def factor_by_division_at(rs: RootSystem, lam: Sequence[int], theta: Sequence[Fraction]) -> MultiPoly:
    """``f_V(lam) / g_lam`` at a concrete theta, as an exact polynomial in ``z0``."""
    lam = tuple(lam)
    sch = scheme(rs)
    table = _freudenthal(rs, lam)
    values = Counter()
    for mu, m in table.items():
        for w in orbit(rs, mu).elements:
            values[sch.value(w, theta, projected=True)] += m
    full = product((Z0 + v) ** k for v, k in values.items())
    gen_values = generator_values_from_theta(rs.lie_type, theta)
    g = product(orbital_factor(rs, mu).at(gen_values) ** m for mu, m in table.items() if mu != lam)
    return full.exact_div_monic(g) if g != 1 else full


# -- sl(2) ---------------------------------------------------------------------

def sl2_multiplicities(m: int) -> dict[int, int]:
    """``d_n`` (multiplicity of weight +-n) for the irreducible sl(2)-module of highest weight m."""
    return {n: 1 for n in range(m % 2, m + 1, 2)}


def sl2_closed_form(d: Mapping[int, int]) -> MultiPoly:
    """``z0^d0 * prod_{n>=1} (z0^2 - n^2 (z1^2 + z2 z3))^d_n``."""
    x = MultiPoly.variable("z1") ** 2 + MultiPoly.variable("z2") * MultiPoly.variable("z3")
    out = Z0 ** d.get(0, 0)
    for n, k in sorted(d.items()):
        if n >= 1 and k:
            out = out * (Z0 * Z0 - x * (n * n)) ** k
    return out


def a1_in_matrix_entries(p: MultiPoly) -> MultiPoly:
    """Identify the A1 generator with the defining pencil: ``e2 = -(z1^2 + z2 z3)``."""
    return p.substitute({"e2": -(MultiPoly.variable("z1") ** 2
                                 + MultiPoly.variable("z2") * MultiPoly.variable("z3"))})
