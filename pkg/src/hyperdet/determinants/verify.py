"""Seeded invariant battery for one format."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..exactalg import rank
from ..mdmatrix import Format, MDMatrix, random_rational, symbolic
from .boundary import Theorem321Policy
from .dispatch import det_dispatch, method_for
from .grassman import pencil_rank_drop_oracle
from .oracles import make_degenerate, witness_check
from .transforms import gl_action, random_unimodular


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerifyReport:
    format: Format
    method: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "format": list(self.format.dims),
            "method": self.method,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def kronecker_frame(dims: tuple):
    """(row, col, pencil) directions when the format is n x (n+1) x 2 up to order."""
    if len(dims) != 3:
        return None
    for z in range(3):
        if dims[z] != 2:
            continue
        r, c = [k for k in range(3) if k != z]
        if dims[c] == dims[r] + 1:
            return (r + 1, c + 1, z + 1)
        if dims[r] == dims[c] + 1:
            return (c + 1, r + 1, z + 1)
    return None


def pencil_slices(a: MDMatrix, frame: tuple):
    r, c, z = frame
    n, m = a.dims[r - 1], a.dims[c - 1]

    def slice_at(k):
        out = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, m + 1):
                idx = [0, 0, 0]
                idx[r - 1], idx[c - 1], idx[z - 1] = i, j, k
                row.append(a[idx])
            out.append(row)
        return out

    return slice_at(1), slice_at(2)


def independently_degenerate(a: MDMatrix, frame=None) -> bool:
    """Degeneracy decided without the determinant: rank for square matrices,
    rank drop of the slice pencil for n x (n+1) x 2. Other formats: False."""
    live = [k for k, n in enumerate(a.dims) if n > 1]
    if len(live) == 2 and a.dims[live[0]] == a.dims[live[1]]:
        n = a.dims[live[0]]
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                idx = [1] * a.format.d
                idx[live[0]], idx[live[1]] = i, j
                row.append(a[idx])
            rows.append(row)
        return rank(rows) < n
    if frame is not None:
        return pencil_rank_drop_oracle(*pencil_slices(a, frame)).exists
    return False


def verify_format(f, samples: int = 50, seed: int = 0, bound: int = 10,
                  policy: Theorem321Policy | None = None, workers: int = 1,
                  max_terms: int | None = None) -> VerifyReport:
    fmt = f if isinstance(f, Format) else Format(tuple(f))
    method = method_for(fmt)
    kw = dict(policy=policy, workers=workers, max_terms=max_terms)
    det = lambda a: det_dispatch(a, **kw).value  # noqa: E731
    checks = []

    sym = det_dispatch(symbolic(fmt), **kw).value
    deg = sym.degree()
    ok = sym.is_homogeneous()
    for k, n in enumerate(fmt.dims):
        for i in range(1, n + 1):
            seen = sym.partial_degrees(lambda v, k=k, i=i: v[k] == i)
            ok = ok and deg % n == 0 and seen == {deg // n}
    checks.append(Check("multidegree", ok, {"degree": deg, "terms": len(sym)}))

    bad = []
    for s in range(samples):
        a, w = make_degenerate(fmt, seed + s)
        if not witness_check(a, w) or det(a) != 0:
            bad.append(seed + s)
    checks.append(Check("degenerate-vanish", not bad, {"samples": samples, "failures": bad}))

    frame = kronecker_frame(fmt.dims)
    zeros, confirmed = [], []
    for s in range(samples):
        b = random_rational(fmt, seed + s, bound)
        if det(b) == 0:
            (confirmed if independently_degenerate(b, frame) else zeros).append(seed + s)
    checks.append(Check("random-nonzero", not zeros,
                        {"samples": samples, "unexplainedZeros": zeros, "confirmedDegenerate": confirmed}))

    rng = random.Random(seed)
    a = random_rational(fmt, seed, bound)
    base = det(a)
    moved = []
    per_dir = max(1, min(20, samples // 2))
    for k, n in enumerate(fmt.dims, start=1):
        for _ in range(per_dir):
            if det(gl_action(a, k, random_unimodular(n, rng))) != base:
                moved.append(k)
    checks.append(Check("sl-invariance", not moved, {"perDirection": per_dir, "failures": moved}))

    scaled = det(MDMatrix(fmt, [2 * x for x in a.entries], "numeric"))
    checks.append(Check("homogeneity", scaled == base * 2**deg, {"lambda": 2, "degree": deg}))

    if frame is not None:
        mismatches = []
        for s in range(samples):
            b = make_degenerate(fmt, seed + s)[0] if s % 2 else random_rational(fmt, seed + s, bound)
            B1, B2 = pencil_slices(b, frame)
            if (det(b) == 0) != pencil_rank_drop_oracle(B1, B2).exists:
                mismatches.append(seed + s)
        checks.append(Check("rank-drop-agreement", not mismatches, {"samples": samples, "failures": mismatches}))
    return VerifyReport(fmt, method, checks)
