"""Boundary-format determinants as a signed sum over permutations and diagrams.

For a boundary format n_1 x ... x n_d x m_d the determinant is

    sum over sigma in Sigma of sign(sigma) * sum over gamma in Gamma(sigma) of
        prod over Q in C of a[i_1, ..., i_d, j(Q)]

where i_k = gamma_k(p_{k-1}(Q)) and gamma assigns an admissible map to every
component key. How those keys and admissibility sets are read is fixed by a
:class:`Theorem321Policy`; see :data:`SHIPPED_POLICY`.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from ..config import resolve_max_terms
from ..errors import CalibrationFailure, SizeGuard, WrongFormat
from ..exactalg import Polynomial
from ..exactalg.polynomial import mono_from_vars
from ..mdmatrix import Format, Kind, MDMatrix, classify_format, m_sequence
from ..qpaths import SigmaStructure, _fiber_maps, boundary_frame, count_C, diagonal_monomial, qspace
from .result import DetResult, finish


@dataclass(frozen=True)
class Theorem321Policy:
    gamma_key: str = "byTailOfSigmaQ"  # or "byTailOfQ"
    admissibility_source: str = "sigmaQ"  # or "Q"
    level_offset: str = "k+1"  # or "k"

    def __post_init__(self):
        if self.gamma_key not in ("byTailOfQ", "byTailOfSigmaQ"):
            raise ValueError(f"bad gamma_key {self.gamma_key!r}")
        if self.admissibility_source not in ("Q", "sigmaQ"):
            raise ValueError(f"bad admissibility_source {self.admissibility_source!r}")
        if self.level_offset not in ("k", "k+1"):
            raise ValueError(f"bad level_offset {self.level_offset!r}")

    @property
    def name(self) -> str:
        return f"{self.gamma_key}/{self.admissibility_source}/{self.level_offset}"

    @classmethod
    def parse(cls, name: str) -> "Theorem321Policy":
        parts = name.split("/")
        if len(parts) != 3:
            raise ValueError(f"policy must look like gammaKey/source/offset, got {name!r}")
        return cls(*parts)


SHIPPED_POLICY = Theorem321Policy("byTailOfSigmaQ", "sigmaQ", "k+1")
ALL_POLICIES = tuple(
    Theorem321Policy(g, s, o)
    for g in ("byTailOfQ", "byTailOfSigmaQ")
    for s in ("Q", "sigmaQ")
    for o in ("k", "k+1")
)


def degree_boundary(f) -> int:
    """Degree of the boundary determinant: |C| of the frame without the distinguished direction."""
    fmt = f if isinstance(f, Format) else Format(tuple(f))
    try:
        frame = boundary_frame(fmt)
    except WrongFormat:
        raise WrongFormat(f"{fmt} is not a boundary format") from None
    return count_C(tuple(fmt.dims[k - 1] for k in frame[:-1]))


# -- the engine ----------------------------------------------------------------

class _Engine:
    """Tables for one (inner dims, policy) pair; the frame variables are
    a[i_1, ..., i_d, j] with 1 <= i_k <= n_k and 1 <= j <= m_d."""

    def __init__(self, dims: tuple, policy: Theorem321Policy):
        self.dims = dims
        self.policy = policy
        self.space = sp = qspace(dims, cap=None)
        self.sigma = SigmaStructure(sp)
        self.d = d = sp.d
        m = sp.m
        self.universe = [None]
        self.masks = [None]
        for lev in range(1, d + 1):
            per = [_fiber_maps(m[lev - 1], sp.block_sizes(lev, c)) for c in range(len(sp.levels[lev - 1]))]
            uni = sorted(set().union(*per))
            pos = {g: i for i, g in enumerate(uni)}
            self.universe.append(uni)
            self.masks.append([sum(1 << pos[g] for g in s) for s in per])
        frame_dims = dims + (m[d],)
        strides = [1] * (d + 1)
        for i in reversed(range(d)):
            strides[i] = strides[i + 1] * frame_dims[i + 1]
        self.frame_dims = frame_dims
        self.strides = strides
        self.kk = [lev - 1 if policy.level_offset == "k+1" else lev for lev in range(d + 1)]

    def gamma_bound(self) -> int:
        """|Gamma| at the identity permutation, used as the per-sigma estimate."""
        sp = self.space
        allowed: dict = {}
        for q in range(len(sp.C)):
            for lev in range(1, self.d + 1):
                key = (lev, sp.coords[q][self.kk[lev]:], sp.l[q][self.kk[lev]])
                mk = self.masks[lev][sp.coords[q][lev - 1]]
                allowed[key] = allowed.get(key, mk) & mk
        return math.prod(max(1, bin(x).count("1")) for x in allowed.values())

    def estimate(self) -> int:
        return self.sigma.order() * self.gamma_bound() * len(self.space.C)

    def tasks(self, want: int = 64) -> list:
        """Prefixes (permutations of the leading components) partitioning Sigma."""
        sizes = self.sigma.sizes
        r, count = 0, 1
        while r < len(sizes) and count < want:
            count *= math.factorial(sizes[r])
            r += 1
        return list(itertools.product(*(itertools.permutations(range(s)) for s in sizes[:r])))

    def run(self, prefixes: Iterable[tuple]) -> dict:
        sp, st, d = self.space, self.sigma, self.d
        pol = self.policy
        by_sigma = pol.gamma_key == "byTailOfSigmaQ"
        src_sigma = pol.admissibility_source == "sigmaQ"
        kk = self.kk
        N = len(sp.C)
        coords, paths, ls = sp.coords, sp.paths, sp.l
        masks, universe, strides = self.masks, self.universe, self.strides
        base_off = [(paths[q][d] - 1) * strides[d] for q in range(N)]
        acc: dict = defaultdict(int)
        for prefix in prefixes:
            tails = itertools.product(*(itertools.permutations(range(s)) for s in st.sizes[len(prefix):]))
            for tail in tails:
                sigma = prefix + tail
                sgn = st.sign(sigma)
                allowed: dict = {}
                qkeys = []
                for q in range(N):
                    sq = st.apply_coords(sigma, q)
                    base = sq if by_sigma else coords[q]
                    src = sq if src_sigma else coords[q]
                    keys = []
                    for lev in range(1, d + 1):
                        key = (lev, base[kk[lev]:], ls[q][kk[lev]])
                        mk = masks[lev][src[lev - 1]]
                        prev = allowed.get(key)
                        allowed[key] = mk if prev is None else prev & mk
                        keys.append(key)
                    qkeys.append(keys)
                if not all(allowed.values()):
                    continue
                order = sorted(allowed)
                where = {key: i for i, key in enumerate(order)}
                choices = []
                for key in order:
                    mk = allowed[key]
                    uni = universe[key[0]]
                    choices.append([uni[b] for b in range(mk.bit_length()) if mk >> b & 1])
                factors = [
                    (base_off[q], [(where[qkeys[q][lev - 1]], paths[q][lev - 1] - 1, strides[lev - 1])
                                   for lev in range(1, d + 1)])
                    for q in range(N)
                ]
                for gam in itertools.product(*choices):
                    mono = tuple(sorted(
                        b + sum(s * (gam[k][p] - 1) for k, p, s in fs) for b, fs in factors
                    ))
                    acc[mono] += sgn
        return {mo: c for mo, c in acc.items() if c}

    def to_polynomial(self, acc: dict) -> Polynomial:
        fd = self.frame_dims
        names = [idx for idx in itertools.product(*(range(1, n + 1) for n in fd))]
        return Polynomial({mono_from_vars(names[o] for o in mono): c for mono, c in acc.items()})


@lru_cache(maxsize=32)
def _engine(dims: tuple, policy: Theorem321Policy) -> _Engine:
    return _Engine(dims, policy)


def _run_chunk(args) -> dict:
    dims, policy, prefixes = args
    return _engine(dims, policy).run(prefixes)


_FORMAL_CACHE: dict = {}


def boundary_formal(dims: tuple, policy: Theorem321Policy = SHIPPED_POLICY, workers: int = 1,
                    max_terms: int | None = None) -> Polynomial:
    """The raw signed sum for the frame n_1 x ... x n_d x m_d (inner dims given)."""
    dims = tuple(dims)
    limit = resolve_max_terms(max_terms)
    if count_C(dims) > limit:
        raise SizeGuard(f"|C| = {count_C(dims)} exceeds the cap {limit}")
    eng = _engine(dims, policy)
    est = eng.estimate()
    if est > limit:
        raise SizeGuard(f"estimated {est} generated terms exceed the cap {limit}")
    key = (dims, policy)
    if key in _FORMAL_CACHE:
        return _FORMAL_CACHE[key]
    tasks = eng.tasks()
    if workers <= 1 or len(tasks) < 2:
        acc = eng.run(tasks)
    else:
        chunks = [tasks[i::workers] for i in range(workers)]
        acc = defaultdict(int)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_chunk, [(dims, policy, c) for c in chunks if c]):
                for mo, c in part.items():
                    acc[mo] += c
        acc = {mo: c for mo, c in acc.items() if c}
    poly = eng.to_polynomial(acc)
    _FORMAL_CACHE[key] = poly
    return poly


def clear_boundary_caches() -> None:
    _FORMAL_CACHE.clear()
    _engine.cache_clear()


def det_boundary(a: MDMatrix, policy: Theorem321Policy | None = None, workers: int = 1,
                 max_terms: int | None = None) -> DetResult:
    cls = classify_format(a.format)
    if cls.kind not in (Kind.BOUNDARY, Kind.SQUARE2D):
        raise WrongFormat(f"{a.format} is not a boundary format")
    policy = policy or SHIPPED_POLICY
    frame = boundary_frame(a.format)
    inner = tuple(a.dims[k - 1] for k in frame[:-1])
    raw = boundary_formal(inner, policy, workers, max_terms)
    frame_fmt = inner + (m_sequence(inner)[-1],)
    anchor = diagonal_monomial(frame_fmt, "boundary")
    result = finish(raw, anchor, "diagonal", frame, a, "boundary")
    result.extra["policy"] = policy.name
    return result


# -- calibration -------------------------------------------------------------------

def check_policy(policy: Theorem321Policy, samples: int = 5, seed: int = 0) -> list:
    """Failures of ``policy`` against the calibration contract (empty when it passes)."""
    from ..mdmatrix import random_rational, symbolic
    from .oracles import make_degenerate
    from .square import det_2d

    failures = []
    for n in (2, 3, 4):
        a = symbolic((n, n))
        got = det_boundary(a, policy).value
        if got != det_2d(a).value:
            failures.append(f"d=1, n={n}: differs from the Leibniz determinant")
    a = symbolic((2, 2, 3))
    p = det_boundary(a, policy).value
    if p.is_zero() or p.degree() != 6 or not p.is_homogeneous():
        failures.append("(2,2,3): not homogeneous of degree 6")
        return failures
    for k, n in enumerate((2, 2, 3)):
        for i in range(1, n + 1):
            if p.partial_degrees(lambda v, k=k, i=i: v[k] == i) != {6 // n}:
                failures.append(f"(2,2,3): partial degree not uniform in direction {k + 1}")
    for s in range(samples):
        b, _ = make_degenerate((2, 2, 3), seed + s)
        if det_boundary(b, policy).value != 0:
            failures.append(f"(2,2,3): nonzero on degenerate sample {seed + s}")
    if all(det_boundary(random_rational((2, 2, 3), seed + s), policy).value == 0 for s in range(samples)):
        failures.append("(2,2,3): vanishes on every random sample")
    return failures


def calibrate(policies=ALL_POLICIES, samples: int = 5, seed: int = 0) -> dict:
    """Run the contract on every policy; raise when none passes."""
    report = {pol.name: check_policy(pol, samples, seed) for pol in policies}
    if not any(not f for f in report.values()):
        raise CalibrationFailure("no policy satisfies the calibration contract")
    return report


def shipped_policy() -> Theorem321Policy:
    return SHIPPED_POLICY
