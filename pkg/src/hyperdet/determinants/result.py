"""Result container, normalization and instantiation of formal determinants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exactalg import Polynomial
from ..exactalg.polynomial import Monomial, mono_from_vars_exp, render_monomial
from ..mdmatrix import Format, MDMatrix


@dataclass(frozen=True)
class Normalization:
    content: int  # positive content divided out of the raw polynomial
    sign: int  # +1 or -1, applied after dividing the content
    anchor: Monomial | None
    rule: str  # "diagonal", "pencil-diagonal", "lex-least" or "none"

    def to_json(self) -> dict:
        return {
            "content": str(self.content),
            "sign": self.sign,
            "anchor": render_monomial(self.anchor) if self.anchor is not None else None,
            "rule": self.rule,
        }


@dataclass(frozen=True)
class DetResult:
    value: object  # Polynomial in symbolic mode, Fraction in numeric mode
    format: Format
    method: str
    normalization: Normalization | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.value, Polynomial)

    def is_zero(self) -> bool:
        return self.value == 0 if not self.is_symbolic else self.value.is_zero()

    def text(self) -> str:
        if self.is_symbolic:
            return self.value.to_text()
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def to_json(self) -> dict:
        out = {"format": list(self.format.dims), "method": self.method}
        if self.is_symbolic:
            out["mode"] = "symbolic"
            out["polynomial"] = self.value.to_json()
        else:
            out["mode"] = "numeric"
            out["value"] = self.text()
        if self.normalization is not None:
            out["normalization"] = self.normalization.to_json()
        return out


def normalize(p: Polynomial, anchor: Monomial | None = None, rule: str = "diagonal"):
    """Divide out the content and fix the sign.

    The anchor monomial gets a positive coefficient when it occurs in ``p``;
    otherwise the least monomial in the canonical order does.
    """
    if p.is_zero():
        return p, Normalization(0, 1, None, "none")
    content, prim = p.primitive()
    coeff = prim.coefficient(anchor) if anchor is not None else 0
    if not coeff:
        anchor, coeff = prim.terms()[0]
        rule = "lex-least"
    sign = 1 if coeff > 0 else -1
    return (prim if sign > 0 else -prim), Normalization(content, sign, anchor, rule)


def frame_map(frame: Sequence[int], full_d: int):
    """Map a frame index tuple to the index of the original d-dimensional format.

    ``frame[r]`` is the original (1-based) direction carried by frame position
    r; directions outside the frame have size 1.
    """

    def to_full(idx: tuple) -> tuple:
        out = [1] * full_d
        for r, k in enumerate(frame):
            out[k - 1] = idx[r]
        return tuple(out)

    return to_full


def to_original(formal: Polynomial, frame: Sequence[int], full_d: int) -> Polynomial:
    to_full = frame_map(frame, full_d)
    return formal.rename({v: to_full(v) for v in formal.variables()})


def monomial_to_original(m: Monomial, frame: Sequence[int], full_d: int) -> Monomial:
    to_full = frame_map(frame, full_d)
    return mono_from_vars_exp((to_full(v), e) for v, e in m)


def instantiate(generic: Polynomial, a: MDMatrix):
    """Evaluate a polynomial in a's generic variables at the entries of ``a``.

    Generic symbolic inputs get a variable rename, other symbolic inputs a
    substitution, numeric inputs an exact evaluation.
    """
    if a.mode == "numeric":
        vals = {idx: a.entries[k] for k, idx in enumerate(a.indices())}
        return _eval_fast(generic, vals)
    if a.is_generic():
        vmap = a.variable_map()
        mapping = {idx: vmap[k] for k, idx in enumerate(a.indices())}
        return generic.rename({v: mapping[v] for v in generic.variables()})
    mapping = {idx: a.entries[k] for k, idx in enumerate(a.indices())}
    return generic.substitute({v: mapping[v] for v in generic.variables()})


def _eval_fast(p: Polynomial, vals: dict) -> Fraction:
    if all(Fraction(x).denominator == 1 for x in vals.values()):
        vals = {k: int(x) for k, x in vals.items()}
        zero = 0
    else:
        vals = {k: Fraction(x) for k, x in vals.items()}
        zero = Fraction(0)
    powers: dict = {}
    total = zero
    for m, c in p.as_dict().items():
        t = c
        for v, e in m:
            key = (v, e)
            x = powers.get(key)
            if x is None:
                x = powers[key] = vals[v] ** e
            t *= x
            if not t:
                break
        total += t
    return Fraction(total)


def finish(raw: Polynomial, anchor: Monomial | None, rule: str, frame, a: MDMatrix, method: str) -> DetResult:
    """Normalize a formal frame polynomial, move it to a's indices and evaluate it on a."""
    formal, norm = normalize(raw, anchor, rule)
    generic = to_original(formal, frame, a.format.d)
    if norm.anchor is not None:
        norm = Normalization(norm.content, norm.sign, monomial_to_original(norm.anchor, frame, a.format.d), norm.rule)
    return DetResult(instantiate(generic, a), a.format, method, norm)
