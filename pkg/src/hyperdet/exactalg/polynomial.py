"""Sparse multivariate polynomials with integer coefficients.

Variables are entry variables ``a[i1,...,id]`` identified by their 1-based
multi-index tuple. A monomial is a tuple of ``(variable, exponent)`` pairs
sorted by variable; a polynomial maps monomials to nonzero ints.

The canonical monomial order is lexicographic on exponent vectors, with the
variables ordered by multi-index lex: a monomial carrying a higher power of
the smallest variable is the larger one. Term lists and serializations are
always produced in ascending canonical order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from ..errors import MissingVariable, NotDivisible, ParseError

Var = tuple
Monomial = tuple  # ((var, exp), ...) sorted by var

ONE_MONO: Monomial = ()


def mono_key(m: Monomial):
    """Sort key realizing the canonical (lex) monomial order."""
    # negated indices reverse the variable order; the trailing 1 keeps a
    # prefix such as (1,1) ahead of (1,1,1)
    return tuple((tuple(-i for i in v) + (1,), e) for v, e in m)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_div(m1: Monomial, m2: Monomial):
    """Return m1 / m2, or None when m2 does not divide m1."""
    d = dict(m1)
    for v, e in m2:
        have = d.get(v, 0)
        if have < e:
            return None
        if have == e:
            del d[v]
        else:
            d[v] = have - e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_from_vars(vs: Iterable[Var]) -> Monomial:
    d: dict = {}
    for v in vs:
        d[v] = d.get(v, 0) + 1
    return tuple(sorted(d.items()))


def render_var(v: Var, compact: bool = False) -> str:
    if compact and all(0 <= i <= 9 for i in v):
        return "a{" + "".join(str(i) for i in v) + "}"
    return "a[" + ",".join(str(i) for i in v) + "]"


def render_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(render_var(v) + (f"^{e}" if e != 1 else "") for v, e in m)


class Polynomial:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("_terms", "_sorted", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._sorted = None
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({ONE_MONO: int(c)} if c else {})

    @classmethod
    def variable(cls, v: Var) -> "Polynomial":
        return cls._raw({((tuple(v), 1),): 1})

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1) -> "Polynomial":
        return cls._raw({m: c} if c else {})

    # -- inspection -------------------------------------------------------
    def terms(self) -> list:
        """Terms as ``(monomial, coeff)`` in ascending canonical order."""
        if self._sorted is None:
            self._sorted = sorted(self._terms.items(), key=lambda t: mono_key(t[0]))
        return self._sorted

    def as_dict(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(ONE_MONO, 0)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(mono_degree(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self._terms}) <= 1

    def variables(self) -> list:
        vs = {v for m in self._terms for v, _ in m}
        return sorted(vs)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def leading_term(self):
        """Largest term in the canonical order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms()[-1]

    # -- arithmetic -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return Polynomial()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __floordiv__(self, other) -> "Polynomial":
        return poly_exact_div(self, other)

    # -- transformations ------------------------------------------------------
    def primitive(self):
        """Return ``(content, primitive part)``; the content is positive."""
        c = self.content()
        if c in (0, 1):
            return c, self
        return c, Polynomial._raw({m: v // c for m, v in self._terms.items()})

    def rename(self, mapping: Mapping[Var, Var]) -> "Polynomial":
        """Substitute variables by variables (mapping must be defined on all of them)."""
        out: dict = {}
        for m, c in self._terms.items():
            nm = mono_from_vars_exp((mapping[v], e) for v, e in m)
            s = out.get(nm, 0) + c
            if s:
                out[nm] = s
            else:
                out.pop(nm, None)
        return Polynomial._raw(out)

    def substitute(self, mapping: Mapping[Var, "Polynomial"]) -> "Polynomial":
        """Substitute polynomials for variables; unmapped variables stay."""
        out: dict = {}
        cache: dict = {}
        for m, c in self._terms.items():
            term = Polynomial.constant(c)
            rest = []
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = mapping[v] ** e
                    term = term * cache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * Polynomial.monomial(tuple(rest))
            for tm, tc in term._terms.items():
                out[tm] = out.get(tm, 0) + tc
        return Polynomial(out)

    def evaluate(self, assignment: Mapping[Var, object]):
        return poly_eval(self, assignment)

    def partial_degrees(self, key) -> set:
        """Distinct values over monomials of the degree in {v : key(v)}."""
        return {sum(e for v, e in m if key(v)) for m in self._terms}

    # -- text / json ------------------------------------------------------
    def to_text(self) -> str:
        return serialize(self)

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"Polynomial({serialize(self)!r})"

    def to_json(self) -> dict:
        return to_json(self)


def mono_from_vars_exp(pairs) -> Monomial:
    d: dict = {}
    for v, e in pairs:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def var(*idx: int) -> Polynomial:
    return Polynomial.variable(tuple(idx))


# -- named operations --------------------------------------------------------------

def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


def poly_scale(p: Polynomial, c: int) -> Polynomial:
    return p * int(c)


def poly_exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return r with p == q * r, raising NotDivisible when none exists over Z."""
    if isinstance(q, int):
        q = Polynomial.constant(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if q.is_constant():
        c = q.constant_term()
        out = {}
        for m, v in p._terms.items():
            quo, rem = divmod(v, c)
            if rem:
                raise NotDivisible(f"coefficient {v} not divisible by {c}")
            out[m] = quo
        return Polynomial._raw(out)
    lq_m, lq_c = q.leading_term()
    rest = dict(p._terms)
    quotient: dict = {}
    qkey = mono_key
    while rest:
        lm = max(rest, key=qkey)
        lc = rest[lm]
        qm = mono_div(lm, lq_m)
        if qm is None:
            raise NotDivisible("leading monomial not divisible")
        qc, rem = divmod(lc, lq_c)
        if rem:
            raise NotDivisible("leading coefficient not divisible")
        quotient[qm] = qc
        for m, c in q._terms.items():
            mm = mono_mul(m, qm)
            s = rest.get(mm, 0) - c * qc
            if s:
                rest[mm] = s
            else:
                rest.pop(mm, None)
    return Polynomial._raw(quotient)


def poly_eval(p: Polynomial, assignment: Mapping[Var, object]):
    """Evaluate exactly; values may be ints or Fractions."""
    total = Fraction(0)
    for m, c in p._terms.items():
        t = Fraction(c)
        for v, e in m:
            try:
                t *= Fraction(assignment[v]) ** e
            except KeyError:
                raise MissingVariable(render_var(v)) from None
        total += t
    return total


# -- serialization ---------------------------------------------------------

def serialize(p: Polynomial) -> str:
    """Canonical text form: ``+C*a[i,j]^e*...`` per term, ascending order."""
    if p.is_zero():
        return "0"
    parts = []
    for m, c in p.terms():
        sign = "+" if c > 0 else "-"
        body = str(abs(c))
        if m:
            body += "*" + render_monomial(m)
        parts.append(sign + body)
    return "".join(parts)


_TERM_RE = re.compile(r"([+-])(\d+)((?:\*a\[[\d,]+\](?:\^\d+)?)*)")
_FACTOR_RE = re.compile(r"\*a\[([\d,]+)\](?:\^(\d+))?")


def parse(text: str) -> Polynomial:
    text = text.strip()
    if text == "0":
        return Polynomial()
    if not text or text[0] not in "+-":
        text = "+" + text
    pos = 0
    out: dict = {}
    while pos < len(text):
        mt = _TERM_RE.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError(f"bad polynomial text at offset {pos}")
        coeff = int(mt.group(2)) * (1 if mt.group(1) == "+" else -1)
        pairs = [
            (tuple(int(x) for x in fm.group(1).split(",")), int(fm.group(2) or 1))
            for fm in _FACTOR_RE.finditer(mt.group(3))
        ]
        m = mono_from_vars_exp(pairs)
        out[m] = out.get(m, 0) + coeff
        pos = mt.end()
    return Polynomial(out)


def to_json(p: Polynomial) -> dict:
    vs = p.variables()
    index = {v: i for i, v in enumerate(vs)}
    return {
        "vars": [list(v) for v in vs],
        "terms": [
            {"coeff": str(c), "exps": [[index[v], e] for v, e in m]}
            for m, c in p.terms()
        ],
    }


def from_json(obj: Mapping) -> Polynomial:
    try:
        vs = [tuple(int(i) for i in v) for v in obj["vars"]]
        out: dict = {}
        for t in obj["terms"]:
            m = mono_from_vars_exp((vs[i], int(e)) for i, e in t["exps"])
            out[m] = out.get(m, 0) + int(t["coeff"])
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise ParseError(f"bad polynomial object: {exc}") from None
    return Polynomial(out)
