"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` stores its terms as a dict from exponent tuples to
coefficients, with the exponent positions given by a tuple of variable names
kept in a fixed global order::

    z0 < theta1 < ... < thetan < generators (e, sb, t, g, ...) < l1 < ... < matrix entries

Coefficients are ``int`` when integral and :class:`fractions.Fraction`
otherwise; floats are rejected. Every operation returns a polynomial in
canonical form (no zero coefficients, no unused variables), so structural
equality is polynomial equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from operator import add as _add
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import MissingVariable, NotDivisible

Number = Union[int, Fraction]
Exps = tuple  # tuple[int, ...]

_NAME_RE = re.compile(r"^([A-Za-z_]+?)(\d*)$")
_GENERATOR_PREFIXES = ("e", "sb", "t", "g", "p", "q", "r", "s")


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """Sort key implementing the global variable order."""
    m = _NAME_RE.match(name)
    if m is None:
        return (9, 0, 0, name)
    prefix, digits = m.groups()
    idx = int(digits) if digits else 0
    if prefix == "z" and digits == "0":
        return (0, 0, 0, name)
    if prefix == "theta":
        return (1, 0, idx, name)
    if prefix in _GENERATOR_PREFIXES:
        return (2, _GENERATOR_PREFIXES.index(prefix), idx, name)
    if prefix == "l":
        return (3, 0, idx, name)
    if prefix == "z":
        return (4, 0, idx, name)
    return (5, 0, idx, name)


def _check_number(c) -> Number:
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        raise TypeError(f"exact coefficient required, got {type(c).__name__}")
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Number, b: Number) -> Number:
    q = Fraction(a, b) if type(a) is int and type(b) is int else a / b
    return q.numerator if q.denominator == 1 else q


def _sorted_vars(names: Iterable[str]) -> tuple:
    return tuple(sorted(set(names), key=var_key))


class MultiPoly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, value: Number | "MultiPoly" = 0):
        if isinstance(value, MultiPoly):
            self._vars, self._terms = value._vars, value._terms
        else:
            c = _check_number(value)
            self._vars = ()
            self._terms = {(): c} if c else {}
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, vars: tuple, terms: dict) -> "MultiPoly":
        p = object.__new__(cls)
        p._vars = vars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def _build(cls, vars: tuple, terms: dict) -> "MultiPoly":
        clean = {}
        for e, c in terms.items():
            if c:
                if type(c) is Fraction and c.denominator == 1:
                    c = c.numerator
                clean[e] = c
        if vars and clean:
            used = [any(col) for col in zip(*clean)]
            if not all(used):
                keep = [i for i, u in enumerate(used) if u]
                vars = tuple(vars[i] for i in keep)
                clean = {tuple(e[i] for i in keep): c for e, c in clean.items()}
        elif not clean:
            vars = ()
        return cls._raw(vars, clean)

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls._raw((name,), {(1,): 1})

    @classmethod
    def constant(cls, c: Number) -> "MultiPoly":
        return cls(c)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[str, int], Number]]) -> "MultiPoly":
        """Build from ``(exponent map, coefficient)`` pairs; like terms are summed."""
        terms = [(dict(m), _check_number(c)) for m, c in terms]
        vars = _sorted_vars(v for m, _ in terms for v, e in m.items() if e)
        pos = {v: i for i, v in enumerate(vars)}
        out: dict = {}
        for m, c in terms:
            e = [0] * len(vars)
            for v, k in m.items():
                if k < 0:
                    raise ValueError("negative exponent")
                if k:
                    e[pos[v]] = k
            key = tuple(e)
            out[key] = out.get(key, 0) + c
        return cls._build(vars, out)

    # -- inspection -------------------------------------------------------

    @property
    def variables(self) -> tuple:
        return self._vars

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._vars

    def constant_value(self) -> Number:
        if self._vars:
            raise ValueError("polynomial is not constant")
        return self._terms.get((), 0)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in ``var``. The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        if var not in self._vars:
            return 0
        i = self._vars.index(var)
        return max(e[i] for e in self._terms)

    def terms(self) -> Iterator[tuple[dict, Number]]:
        """Yield ``(exponent map, coefficient)`` in display order (graded lex, descending)."""
        for e in sorted(self._terms, key=lambda e: (sum(e), e), reverse=True):
            yield {v: k for v, k in zip(self._vars, e) if k}, self._terms[e]

    def coefficient(self, monomial: Mapping[str, int]) -> Number:
        for v, k in monomial.items():
            if k and v not in self._vars:
                return 0
        e = tuple(monomial.get(v, 0) for v in self._vars)
        return self._terms.get(e, 0)

    def coefficients(self, var: str) -> dict[int, "MultiPoly"]:
        """Split into ``{k: coefficient of var**k}``."""
        if var not in self._vars:
            return {0: self} if self._terms else {}
        i = self._vars.index(var)
        rest = self._vars[:i] + self._vars[i + 1:]
        groups: dict[int, dict] = {}
        for e, c in self._terms.items():
            groups.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: MultiPoly._build(rest, t) for k, t in groups.items()}

    def collect(self, names: Sequence[str]) -> dict[tuple, "MultiPoly"]:
        """Group by the exponents of ``names``: ``{exps over names: coefficient polynomial}``."""
        idx = [self._vars.index(v) if v in self._vars else None for v in names]
        rest = [i for i, v in enumerate(self._vars) if v not in names]
        rest_vars = tuple(self._vars[i] for i in rest)
        groups: dict[tuple, dict] = {}
        for e, c in self._terms.items():
            key = tuple(0 if i is None else e[i] for i in idx)
            groups.setdefault(key, {})[tuple(e[i] for i in rest)] = c
        return {k: MultiPoly._build(rest_vars, t) for k, t in groups.items()}

    @classmethod
    def from_collected(cls, names: Sequence[str], groups: Mapping[tuple, "MultiPoly"]) -> "MultiPoly":
        """Inverse of :meth:`collect`."""
        names = tuple(names)
        inner = _sorted_vars(v for c in groups.values() for v in c._vars)
        if set(inner) & set(names):
            raise ValueError("coefficient polynomials overlap the collected variables")
        vars = _sorted_vars(names + inner)
        pos_n = [vars.index(v) for v in names]
        out: dict = {}
        n = len(vars)
        for key, coef in groups.items():
            pos_c = [vars.index(v) for v in coef._vars]
            for e, c in coef._terms.items():
                new = [0] * n
                for i, k in zip(pos_n, key):
                    new[i] = k
                for i, k in zip(pos_c, e):
                    new[i] = k
                t = tuple(new)
                out[t] = out.get(t, 0) + c
        return cls._build(vars, out)

    def weighted_degree(self, weights: Mapping[str, int]) -> int | None:
        """The common weighted degree of all terms, or ``None`` if not homogeneous."""
        w = [weights.get(v, 1) for v in self._vars]
        degs = {sum(a * b for a, b in zip(w, e)) for e in self._terms}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    # -- arithmetic -------------------------------------------------------

    def _align(self, other: "MultiPoly") -> tuple[tuple, dict, dict]:
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        vars = _sorted_vars(self._vars + other._vars)
        return vars, _embed(self, vars), _embed(other, vars)

    def __add__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        vars, a, b = self._align(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly._build(vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, c: Number) -> "MultiPoly":
        c = _check_number(c)
        if not c:
            return MultiPoly()
        return MultiPoly._build(self._vars, {e: k * c for e, k in self._terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return MultiPoly()
        if not other._vars:
            return self.scale(other._terms[()])
        if not self._vars:
            return other.scale(self._terms[()])
        vars, a, b = self._align(other)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(_add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return MultiPoly._build(vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, den: "MultiPoly | Number") -> "MultiPoly":
        """The exact quotient ``self / den``; raises :class:`NotDivisible` otherwise."""
        den = _coerce(den)
        if den is NotImplemented:
            raise TypeError("divisor must be a polynomial or rational")
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not den._vars:
            return self.scale(_div(1, den._terms[()]))
        vars, r, d = self._align(den)
        r = dict(r)
        lead_d = max(d)
        cd = d[lead_d]
        rest_d = [(e, c) for e, c in d.items() if e != lead_d]
        q: dict = {}
        while r:
            lr = max(r)
            shift = tuple(a - b for a, b in zip(lr, lead_d))
            if min(shift) < 0:
                raise NotDivisible("leading term of remainder is not divisible by the divisor")
            c = _div(r.pop(lr), cd)
            q[shift] = c
            for e, k in rest_d:
                ne = tuple(map(_add, e, shift))
                v = r.get(ne, 0) - c * k
                if v:
                    r[ne] = v
                else:
                    r.pop(ne, None)
        return MultiPoly._build(vars, q)

    def exact_div_monic(self, den: "MultiPoly", var: str = "z0") -> "MultiPoly":
        """Exact quotient by a divisor monic in ``var``, dividing on ``var``-coefficients.

        Much cheaper than :meth:`exact_div` when both sides are dense in the
        remaining variables.
        """
        dc = den.coefficients(var)
        m = max(dc, default=-1)
        if m < 0 or dc[m] != 1:
            raise ValueError(f"divisor is not monic in {var}")
        rem = self.coefficients(var)
        if not rem:
            return MultiPoly()
        top = max(rem)
        if top < m:
            raise NotDivisible(f"degree {top} in {var} is below the divisor's {m}")
        lower = [(j, d) for j, d in dc.items() if j != m]
        quotient: dict[tuple, MultiPoly] = {}
        for k in range(top - m, -1, -1):
            c = rem.pop(k + m, None)
            if not c:
                continue
            quotient[(k,)] = c
            for j, d in lower:
                rem[k + j] = rem.get(k + j, MultiPoly()) - c * d
        if any(rem.values()):
            raise NotDivisible(f"nonzero remainder after division on {var}")
        return MultiPoly.from_collected((var,), quotient)

    # -- evaluation and substitution -------------------------------------

    def eval(self, assignment: Mapping[str, Number]) -> Number:
        """Evaluate exactly; every variable of ``self`` must be assigned."""
        values = []
        for v in self._vars:
            if v not in assignment:
                raise MissingVariable(v)
            values.append(_check_number(assignment[v]))
        powers: list[dict[int, Number]] = [{} for _ in values]
        total: Number = 0
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    pk = cache.get(k)
                    if pk is None:
                        pk = cache[k] = values[i] ** k
                    term = term * pk
            total += term
        return _check_number(total) if isinstance(total, Fraction) else total

    def substitute(self, rules: Mapping[str, "MultiPoly | Number | str"]) -> "MultiPoly":
        """Simultaneously replace variables by polynomials (or numbers, or variable names)."""
        rules = {v: _coerce(r if not isinstance(r, str) else MultiPoly.variable(r))
                 for v, r in rules.items() if v in self._vars}
        if not rules:
            return self
        if all(len(r._terms) <= 1 for r in rules.values()):
            return self._substitute_monomials(rules)
        idx = [i for i, v in enumerate(self._vars) if v in rules]
        keep = [i for i, v in enumerate(self._vars) if v not in rules]
        keep_vars = tuple(self._vars[i] for i in keep)
        groups: dict[tuple, dict] = {}
        for e, c in self._terms.items():
            groups.setdefault(tuple(e[i] for i in idx), {})[tuple(e[i] for i in keep)] = c
        power_cache: dict[tuple[int, int], MultiPoly] = {}

        def power(j: int, k: int) -> MultiPoly:
            key = (j, k)
            if key not in power_cache:
                base = rules[self._vars[idx[j]]]
                power_cache[key] = base if k == 1 else power(j, k - 1) * base
            return power_cache[key]

        result = MultiPoly()
        for sub_e, kept in groups.items():
            factor = MultiPoly._build(keep_vars, kept)
            for j, k in enumerate(sub_e):
                if k:
                    factor = factor * power(j, k)
            result = result + factor
        return result

    def _substitute_monomials(self, rules: dict) -> "MultiPoly":
        parts = {}
        for v, r in rules.items():
            if not r._terms:
                parts[v] = None
            else:
                (e, c), = r._terms.items()
                parts[v] = (dict(zip(r._vars, e)), c)
        vars = _sorted_vars([v for v in self._vars if v not in rules]
                            + [w for p in parts.values() if p for w in p[0]])
        pos = {v: i for i, v in enumerate(vars)}
        plan = []
        for v in self._vars:
            if v in rules:
                p = parts[v]
                plan.append(None if p is None else ([(pos[w], k) for w, k in p[0].items() if k], p[1]))
            else:
                plan.append(([(pos[v], 1)], 1))
        out: dict = {}
        n = len(vars)
        for e, c in self._terms.items():
            new = [0] * n
            coef = c
            for k, step in zip(e, plan):
                if not k:
                    continue
                if step is None:
                    coef = 0
                    break
                targets, rc = step
                for j, m in targets:
                    new[j] += m * k
                if rc != 1:
                    coef = coef * rc ** k
            if coef:
                key = tuple(new)
                out[key] = out.get(key, 0) + coef
        return MultiPoly._build(vars, out)

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return self.substitute({a: MultiPoly.variable(b) for a, b in mapping.items()})

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- output -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.terms():
            factors = [v if k == 1 else f"{v}^{k}" for v, k in mono.items()]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_latex(self, names: Mapping[str, str] | None = None) -> str:
        """LaTeX rendering; ``names`` overrides the symbol printed for a variable."""
        names = dict(names or {})
        if not self._terms:
            return "0"
        out = ""
        for n, (mono, c) in enumerate(self.terms()):
            mag = abs(c)
            sym = "".join(_latex_power(names.get(v) or latex_name(v), k) for v, k in mono.items())
            if not sym:
                body = _latex_number(mag)
            elif mag == 1:
                body = sym
            else:
                body = _latex_number(mag) + sym
            if n == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> list[dict]:
        out = []
        for mono, c in self.terms():
            c = Fraction(c)
            out.append({"exps": mono, "num": str(c.numerator), "den": str(c.denominator)})
        return out

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "MultiPoly":
        return cls.from_terms((t["exps"], Fraction(int(t["num"]), int(t["den"]))) for t in data)


def _embed(p: MultiPoly, vars: tuple) -> dict:
    if p._vars == vars:
        return p._terms
    pos = [vars.index(v) for v in p._vars]
    n = len(vars)
    out = {}
    for e, c in p._terms.items():
        new = [0] * n
        for i, k in zip(pos, e):
            new[i] = k
        out[tuple(new)] = c
    return out


def _coerce(x):
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return MultiPoly(x)
    return NotImplemented


def _latex_number(c: Number) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _latex_power(sym: str, k: int) -> str:
    return sym if k == 1 else f"{sym}^{{{k}}}"


def latex_name(var: str) -> str:
    """Default LaTeX symbol for a variable name."""
    m = _NAME_RE.match(var)
    if m is None:
        return var
    prefix, digits = m.groups()
    base = {"theta": r"\theta", "sb": r"\bar{s}"}.get(prefix, prefix)
    return f"{base}_{{{digits}}}" if digits else base


def var(name: str) -> MultiPoly:
    return MultiPoly.variable(name)


def variables(*names: str) -> tuple[MultiPoly, ...]:
    return tuple(MultiPoly.variable(n) for n in names)


def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return _coerce(a) + b


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return _coerce(a) * b


def exact_div(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    return _coerce(num).exact_div(den)


def evaluate(p: MultiPoly, assignment: Mapping[str, Number]) -> Number:
    return _coerce(p).eval(assignment)


def substitute(p: MultiPoly, rules: Mapping[str, MultiPoly | Number]) -> MultiPoly:
    return _coerce(p).substitute(rules)


def product(factors: Iterable[MultiPoly]) -> MultiPoly:
    """Balanced product tree; keeps intermediate sizes even."""
    layer = list(factors)
    if not layer:
        return MultiPoly(1)
    while len(layer) > 1:
        nxt = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]
