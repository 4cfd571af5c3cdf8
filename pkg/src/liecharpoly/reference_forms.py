"""Closed forms in the customary notation, kept for regression and discrepancy logging.

The sl(3) forms use ``p = e2`` and ``q = e3``; the o(5) forms use ``sb1, sb2``.
Each record carries the form exactly as customarily printed, so that
:func:`discrepancies` can report where the computed factors differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F

from .exact_poly import MultiPoly
from .orbital_factor import orbital_factor

z0, p, q, l1, l2, s1, s2 = (MultiPoly.variable(v) for v in ("z0", "e2", "e3", "l1", "l2", "sb1", "sb2"))


def a2_generic_coefficients() -> dict[int, MultiPoly]:
    """Coefficients of ``z0^0..z0^4`` of the sl(3) factor of ``l1 b1 + l2 b2`` (both nonzero)."""
    r = l1 * l1 + l1 * l2 + l2 * l2
    s = (l1 - l2) * (2 * l1 + l2) * (l1 + 2 * l2)
    return {
        4: 2 * p * r,
        3: q * s,
        2: p * p * r * r,
        1: p * q * s * r,
        0: q * q * r ** 3 + p ** 3 * (l1 * l1 * l2 * l2 * (l1 + l2) ** 2),
    }


def a2_generic_factor() -> MultiPoly:
    return z0 ** 6 + sum((c * z0 ** k for k, c in a2_generic_coefficients().items()), MultiPoly())


def a2_line_factors() -> dict[tuple[int, int], MultiPoly]:
    """The printed sl(3) factors for ``l1 b1`` and ``l2 b2``."""
    return {
        (1, 0): z0 ** 3 - p * l1 ** 2 * z0 + q * l1 ** 3,
        (0, 1): z0 ** 3 - p * l2 ** 2 * z0 - q * l2 ** 3,
    }


def a2_fifteen() -> dict[tuple[int, int], MultiPoly]:
    """The printed factors of the 15-dimensional sl(3)-module of highest weight ``4 b2``."""
    return {
        (0, 4): z0 ** 3 - 16 * p * z0 - 64 * q,
        (1, 2): (z0 ** 6 + 14 * p * z0 ** 4 - 20 * q * z0 ** 3 + 49 * p ** 2 * z0 ** 2
                 - 140 * p * q * z0 + 343 * q ** 2 + 36 * p ** 3),
        (2, 0): z0 ** 3 - 4 * p * z0 + 8 * q,
        (0, 1): z0 ** 3 - p * z0 - q,
    }


def sl3_p_from_entries(z: dict[str, MultiPoly | F | int]):
    """``p`` from the entries ``z11, z22, zij`` of a traceless 3x3 pencil."""
    return -(z["z11"] ** 2 + z["z22"] ** 2 - z["z11"] * z["z22"]
             + z["z12"] * z["z21"] + z["z13"] * z["z31"] + z["z23"] * z["z32"])


def b2_generic_coefficients() -> dict[int, MultiPoly]:
    """Coefficients of ``z0^6, z0^4, z0^2, z0^0`` (inside the printed leading ``z0``) for o(5)."""
    a = s1 * s1 - 2 * s2
    c1 = (-2 * l1 ** 2 - 2 * l1 * l2 - l2 ** 2) * s1
    c2 = ((l1 ** 4 + 2 * l1 ** 3 * l2 + F(5, 2) * l1 ** 2 * l2 ** 2 + F(3, 2) * l1 * l2 ** 3
           + F(3, 8) * l2 ** 4) * a
          + (4 * l1 ** 4 + 8 * l1 ** 3 * l2 + 5 * l1 ** 2 * l2 ** 2 + l1 * l2 ** 3 + F(1, 4) * l2 ** 4) * s2)
    u = 2 * l1 ** 2 + 2 * l1 * l2 + l2 ** 2
    c3 = (F(-1, 16) * l2 ** 2 * (2 * l1 + l2) ** 2 * u * (s1 ** 3 - 3 * s1 * s2)
          - F(1, 16) * (4 * l1 ** 2 + 2 * l1 * l2 - l2 ** 2) * u * (4 * l1 ** 2 + 6 * l1 * l2 + l2 ** 2) * s1 * s2)
    c4 = (F(1, 256) * l2 ** 4 * (2 * l1 + l2) ** 4 * (s1 ** 4 + 2 * s2 ** 2 - 4 * s1 ** 2 * s2)
          - F(1, 64) * l2 ** 2 * (2 * l1 + l2) ** 2
          * (8 * l1 ** 4 + 16 * l1 ** 3 * l2 + 12 * l1 ** 2 * l2 ** 2 + 4 * l1 * l2 ** 3 + l2 ** 4) * s2 * a
          + (l1 ** 8 + 4 * l1 ** 7 * l2 + 7 * l1 ** 6 * l2 ** 2 + 7 * l1 ** 5 * l2 ** 3
             + F(37, 8) * l1 ** 4 * l2 ** 4 + F(9, 4) * l1 ** 3 * l2 ** 5 + F(13, 16) * l1 ** 2 * l2 ** 6
             + F(3, 16) * l1 * l2 ** 7 + F(3, 128) * l2 ** 8) * s2 ** 2)
    return {6: c1, 4: c2, 2: c3, 0: c4}


def b2_line_factors() -> dict[tuple[int, int], MultiPoly]:
    """The printed o(5) factors for ``l1 b1`` and ``l2 b2``, including their leading ``z0``."""
    return {
        (1, 0): z0 * (z0 ** 4 - l1 ** 2 * s1 * z0 ** 2 + l1 ** 2 * l2 ** 2 * s2),
        (0, 1): z0 * (z0 ** 4 - F(1, 2) * l2 ** 2 * s1 * z0 ** 2
                      + F(1, 16) * l2 ** 4 * (s1 * s1 - 2 * s2) - F(1, 8) * l2 ** 4 * s2),
    }


@dataclass(frozen=True)
class Discrepancy:
    source: str
    mu: tuple
    exponent: int | None
    printed: str
    computed: str
    note: str

    def to_json(self) -> dict:
        return {"source": self.source, "mu": list(self.mu), "exponent": self.exponent,
                "printed": self.printed, "computed": self.computed, "note": self.note}


def _compare(source: str, mu: tuple, printed: MultiPoly, computed: MultiPoly, note: str) -> list[Discrepancy]:
    if printed == computed:
        return []
    out = []
    pc, cc = printed.coefficients("z0"), computed.coefficients("z0")
    for k in sorted(set(pc) | set(cc), reverse=True):
        a, b = pc.get(k, MultiPoly()), cc.get(k, MultiPoly())
        if a != b:
            out.append(Discrepancy(source, mu, k, str(a), str(b), note))
    return out


def discrepancies() -> list[Discrepancy]:
    """Every place where a printed closed form differs from the computed factor."""
    out: list[Discrepancy] = []
    generic = orbital_factor("A2", (1, 1), symbolic=True).poly
    out += _compare("sl3 generic factor", ("l1", "l2"), a2_generic_factor(), generic, "coefficient mismatch")
    for mu, printed in a2_line_factors().items():
        computed = orbital_factor("A2", mu, symbolic=True).poly
        out += _compare("sl3 line factor", mu, printed, computed, "sign of the p-term")
    for mu, printed in a2_fifteen().items():
        computed = orbital_factor("A2", mu).poly
        out += _compare("sl3 15-dimensional module", mu, printed, computed, "sign of the p-term")
    b2 = orbital_factor("B2", (1, 1), symbolic=True).poly.coefficients("z0")
    for k, printed in b2_generic_coefficients().items():
        computed = b2.get(k, MultiPoly())
        if printed != computed:
            out.append(Discrepancy("o5 generic factor", ("l1", "l2"), k, str(printed), str(computed),
                                   "coefficient mismatch"))
    for mu, printed in b2_line_factors().items():
        computed = orbital_factor("B2", mu, symbolic=True).poly
        out.append(Discrepancy("o5 line factor", mu, None, str(printed), str(computed),
                               "printed form carries an extra z0 factor"))
        out += _compare("o5 line factor", mu, printed.exact_div(z0), computed,
                        "l2 appears in the constant term of an l1-only case")
    return out
