"""Q-sequences, Q-paths, Q-diagrams and the permutation data built on them.

For a format (n_1, ..., n_d) the ordered sets P_0, ..., P_d are the ranges
1..m_k. A Q-sequence picks an (n_k - 1)-subset Q_k of every P_k (k >= 1);
it is stored as a tuple of sorted tuples. Every ordering below is the
canonical one: subsets are compared by their largest differing element, and
sequences by (Q_d, ..., Q_1) in that order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .config import resolve_max_terms
from .errors import (
    IndexOutOfRange,
    NotInjective,
    RangeViolation,
    SizeGuard,
    SizeMismatch,
    WrongFormat,
)
from .exactalg.polynomial import Monomial, mono_from_vars
from .mdmatrix import Format, Kind, classify_format, m_sequence


def _dims(f) -> tuple:
    return f.dims if isinstance(f, Format) else tuple(int(n) for n in f)


def subset_key(s: Sequence[int]) -> tuple:
    return tuple(reversed(s))


def canonical_subsets(m: int, size: int) -> list:
    """All ``size``-subsets of 1..m in canonical order."""
    return sorted(itertools.combinations(range(1, m + 1), size), key=subset_key)


def count_C(f) -> int:
    dims = _dims(f)
    m = m_sequence(dims)
    return prod(comb(m[k], dims[k - 1] - 1) for k in range(1, len(dims) + 1))


def level_dims(f) -> tuple:
    """Level sizes (n_1, ..., n_d) carrying the sequences Q of a format.

    A boundary or square format contributes its directions other than the
    distinguished one (so 2x2x3 has levels (2, 2)); any other format uses
    all of its directions.
    """
    dims = _dims(f)
    kind = classify_format(Format(dims)).kind
    if kind in (Kind.BOUNDARY, Kind.SQUARE2D):
        frame = boundary_frame(dims)
        return tuple(dims[k - 1] for k in frame[:-1])
    return dims


def enumerate_C(f, cap: int | None = None) -> Iterator[tuple]:
    """The sequences Q of a format, in canonical order (see :func:`level_dims`)."""
    return enumerate_levels(level_dims(f), cap)


def enumerate_levels(sizes, cap: int | None = None) -> Iterator[tuple]:
    """All Q over the given level sizes, in canonical order."""
    dims = _dims(sizes)
    size = count_C(dims)
    limit = resolve_max_terms(cap)
    if size > limit:
        raise SizeGuard(f"|C| = {size} exceeds the cap {limit}")
    m = m_sequence(dims)
    levels = [canonical_subsets(m[k], dims[k - 1] - 1) for k in range(1, len(dims) + 1)]
    for rev in itertools.product(*reversed(levels)):
        yield tuple(reversed(rev))


# -- single-level maps -------------------------------------------------------

def order_iso(Q_next: Sequence[int], m_k: int, m_next: int) -> tuple:
    """The order isomorphism P_k -> P_{k+1} minus Q_{k+1}, as a tuple of images."""
    rest = [x for x in range(1, m_next + 1) if x not in set(Q_next)]
    if len(rest) != m_k:
        raise SizeMismatch(f"|P_{{k+1}} \\ Q| = {len(rest)} but |P_k| = {m_k}")
    return tuple(rest)


def block_of(Q_k: Sequence[int], x: int) -> int:
    return sum(1 for c in Q_k if c < x) + 1


def blocks(Q_k: Sequence[int], m_k: int, n_k: int) -> tuple:
    """The runs of P_k minus Q_k cut by Q_k; run i sits between cut i-1 and cut i."""
    if len(Q_k) != n_k - 1:
        raise SizeMismatch(f"|Q_k| = {len(Q_k)}, expected {n_k - 1}")
    cuts = set(Q_k)
    out = [[] for _ in range(n_k)]
    for x in range(1, m_k + 1):
        if x not in cuts:
            out[block_of(Q_k, x) - 1].append(x)
    return tuple(tuple(b) for b in out)


def block_sizes(Q_k: Sequence[int], m_k: int, n_k: int) -> tuple:
    return tuple(len(b) for b in blocks(Q_k, m_k, n_k))


def induced_map(phi: Sequence[int], Q_k: Sequence[int], m_k: int, n_k: int) -> tuple:
    """Label each p in P_{k-1} by the block containing phi(p)."""
    if len(set(phi)) != len(phi):
        raise NotInjective(f"{tuple(phi)} repeats a value")
    cuts = set(Q_k)
    for y in phi:
        if y in cuts or not 1 <= y <= m_k:
            raise RangeViolation(f"{y} is not in P_k minus Q_k")
    blocks(Q_k, m_k, n_k)  # validates |Q_k|
    return tuple(block_of(Q_k, y) for y in phi)


def is_admissible(g: Sequence[int], sizes: Sequence[int]) -> bool:
    counts = [0] * len(sizes)
    for v in g:
        if not 1 <= v <= len(sizes):
            return False
        counts[v - 1] += 1
    return all(c <= s for c, s in zip(counts, sizes))


@lru_cache(maxsize=None)
def _fiber_maps(length: int, sizes: tuple) -> tuple:
    out = []
    counts = [0] * len(sizes)
    cur = []

    def rec():
        if len(cur) == length:
            out.append(tuple(cur))
            return
        for i, s in enumerate(sizes):
            if counts[i] < s:
                counts[i] += 1
                cur.append(i + 1)
                rec()
                cur.pop()
                counts[i] -= 1

    rec()
    return tuple(out)


def admissible_maps(Q_k: Sequence[int], m_prev: int, n_k: int, cap: int | None = None) -> tuple:
    """All maps P_{k-1} -> 1..n_k whose fibers fit inside the blocks, in lex order."""
    sizes = block_sizes(Q_k, m_prev + n_k - 1, n_k)
    bound = factorial(m_prev) // prod(factorial(s) for s in sizes) if sum(sizes) == m_prev else n_k**m_prev
    limit = resolve_max_terms(cap)
    if bound > limit:
        raise SizeGuard(f"about {bound} admissible maps exceed the cap {limit}")
    return _fiber_maps(m_prev, sizes)


# -- whole sequences -----------------------------------------------------------

def q_path(Q: Sequence[Sequence[int]], f=None) -> tuple:
    """(p_0, ..., p_d): p_0 = 1 and p_{k+1} = f_k(p_k)."""
    p = [1]
    m = 1
    for k, Qk in enumerate(Q):
        n = len(Qk) + 1 if f is None else _dims(f)[k]
        img = order_iso(Qk, m, m + n - 1)
        p.append(img[p[-1] - 1])
        m += n - 1
    return tuple(p)


def path_steps(Q: Sequence[Sequence[int]]) -> str:
    """Drawing rule for paths: 'L' when the ordinal is kept, 'R' when it moves up."""
    p = q_path(Q)
    return "".join("L" if b == a else "R" for a, b in zip(p, p[1:]))


def j_of(Q: Sequence[Sequence[int]]) -> int:
    return q_path(Q)[-1]


def initial_diagram(Q: Sequence[Sequence[int]]) -> tuple:
    g = []
    m = 1
    for Qk in Q:
        n = len(Qk) + 1
        phi = order_iso(Qk, m, m + n - 1)
        g.append(induced_map(phi, Qk, m + n - 1, n))
        m += n - 1
    return tuple(g)


def path_over_diagram(Q: Sequence[Sequence[int]], g: Sequence[Sequence[int]]) -> tuple:
    """I(Q, g) = (g_1(p_0), ..., g_d(p_{d-1})) along the path of Q."""
    if len(g) != len(Q):
        raise SizeMismatch("diagram and sequence have different lengths")
    p = q_path(Q)
    try:
        return tuple(g[k][p[k] - 1] for k in range(len(Q)))
    except IndexError:
        raise IndexOutOfRange("diagram does not cover the path") from None


# -- cached per-format tables -------------------------------------------------

class QSpace:
    """Precomputed tables for one format. Obtain through :func:`qspace`."""

    def __init__(self, dims: tuple, cap: int | None = None):
        self.dims = dims
        self.d = len(dims)
        self.m = m_sequence(dims)
        self.levels = [canonical_subsets(self.m[k], dims[k - 1] - 1) for k in range(1, self.d + 1)]
        self.level_index = [{s: i for i, s in enumerate(lv)} for lv in self.levels]
        self.C = list(enumerate_levels(dims, cap))
        self.index = {Q: i for i, Q in enumerate(self.C)}
        self.coords = [tuple(self.level_index[k][Q[k]] for k in range(self.d)) for Q in self.C]
        self.paths = [q_path(Q) for Q in self.C]
        # l[q][k] for k = 0..d-1 is the ordinal inside D(Q^(k), p_k); l[q][d] is the
        # ordinal inside D(Q^(d)) := C.
        groups: dict = {}
        self.l = [[0] * (self.d + 1) for _ in self.C]
        for q, Q in enumerate(self.C):
            for k in range(self.d):
                key = (k, Q[k:], self.paths[q][k])
                members = groups.setdefault(key, [])
                members.append(q)
                self.l[q][k] = len(members)
            self.l[q][self.d] = q + 1
        self.classes = groups

    def conj_class(self, k: int, tail: tuple, anchor: int | None) -> list:
        if k == self.d:
            return list(self.C)
        return [self.C[q] for q in self.classes.get((k, tuple(tail), anchor), [])]

    def block_sizes(self, level: int, coord: int) -> tuple:
        return block_sizes(self.levels[level - 1][coord], self.m[level], self.dims[level - 1])


@lru_cache(maxsize=32)
def _qspace(dims: tuple) -> QSpace:
    return QSpace(dims, cap=None)


def qspace(f, cap: int | None = None) -> QSpace:
    dims = _dims(f)
    limit = resolve_max_terms(cap)
    if count_C(dims) > limit:
        raise SizeGuard(f"|C| = {count_C(dims)} exceeds the cap {limit}")
    return _qspace(dims)


@dataclass(frozen=True)
class ConjClassKey:
    level: int
    tail: tuple
    anchor: int | None


def conj_class(f, key: ConjClassKey) -> list:
    return qspace(f).conj_class(key.level, key.tail, key.anchor)


def l_sequence(Q: Sequence[Sequence[int]], f=None) -> tuple:
    """(l_1, ..., l_d)."""
    Q = tuple(tuple(s) for s in Q)
    sp = qspace(f if f is not None else tuple(len(s) + 1 for s in Q))
    return tuple(sp.l[sp.index[Q]][1:])


# -- the permutation group and its action ---------------------------------------

class SigmaStructure:
    """Components of the product of permutation groups acting on C_{k+1}.

    Component keys are ``(level, tail, l)``: the group at ``level`` = k+1 indexed
    by the tail (Q_{k+1}, ..., Q_d) and the ordinal l_k. A group element is a
    tuple with one permutation (0-based images over the level's subsets) per
    component.
    """

    def __init__(self, space: QSpace):
        self.space = space
        d = space.d
        keys = set()
        for q, Q in enumerate(space.C):
            for lev in range(1, d + 1):
                keys.add((lev, space.coords[q][lev:], space.l[q][lev - 1]))
        self.components = sorted(keys)
        self.position = {key: i for i, key in enumerate(self.components)}
        self.sizes = [len(space.levels[key[0] - 1]) for key in self.components]
        self.comp_of = [
            tuple(self.position[(lev, space.coords[q][lev:], space.l[q][lev - 1])] for lev in range(1, d + 1))
            for q in range(len(space.C))
        ]

    def order(self) -> int:
        return prod(factorial(s) for s in self.sizes)

    def identity(self) -> tuple:
        return tuple(tuple(range(s)) for s in self.sizes)

    def random(self, rng: random.Random) -> tuple:
        out = []
        for s in self.sizes:
            perm = list(range(s))
            rng.shuffle(perm)
            out.append(tuple(perm))
        return tuple(out)

    def elements(self) -> Iterator[tuple]:
        return itertools.product(*(itertools.permutations(range(s)) for s in self.sizes))

    def apply_coords(self, sigma: Sequence, q: int) -> tuple:
        coords = self.space.coords[q]
        return tuple(sigma[c][coords[i]] for i, c in enumerate(self.comp_of[q]))

    def apply(self, sigma: Sequence, Q) -> tuple:
        sp = self.space
        q = sp.index[tuple(tuple(s) for s in Q)]
        return tuple(sp.levels[k][c] for k, c in enumerate(self.apply_coords(sigma, q)))

    def component_of(self, sigma: Sequence, Q) -> tuple:
        """sigma restricted to the components that Q reads; identity elsewhere."""
        q = self.space.index[tuple(tuple(s) for s in Q)]
        used = set(self.comp_of[q])
        return tuple(p if i in used else tuple(range(len(p))) for i, p in enumerate(sigma))

    def sign(self, sigma: Sequence) -> int:
        s = 1
        for p in sigma:
            s *= perm_sign(p)
        return s


def perm_sign(p: Sequence[int]) -> int:
    p = list(p)
    s = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def sigma_structure(f, cap: int | None = None) -> SigmaStructure:
    sp = qspace(f, cap)
    st = SigmaStructure(sp)
    limit = resolve_max_terms(cap)
    if len(st.components) > limit:
        raise SizeGuard(f"{len(st.components)} components exceed the cap {limit}")
    return st


def apply_sigma(sigma: Sequence, Q, f=None) -> tuple:
    Q = tuple(tuple(s) for s in Q)
    st = sigma_structure(f if f is not None else tuple(len(s) + 1 for s in Q))
    return st.apply(sigma, Q)


def sign_sigma(sigma: Sequence) -> int:
    s = 1
    for p in sigma:
        s *= perm_sign(p)
    return s


# -- diagonal monomials ----------------------------------------------------------

def closed_index(Q: Sequence[Sequence[int]]) -> tuple:
    return path_over_diagram(Q, initial_diagram(Q))


def boundary_frame(f) -> tuple:
    """Direction order (1-based) moving the distinguished direction last.

    Square matrices count as the one-level case. Size-1 directions are left
    out of the frame.
    """
    fmt = f if isinstance(f, Format) else Format(_dims(f))
    cls = classify_format(fmt)
    live = [k + 1 for k, n in enumerate(fmt.dims) if n > 1]
    if cls.kind is Kind.SQUARE2D:
        j = live[-1]
    elif cls.kind is Kind.BOUNDARY:
        j = cls.direction
    else:
        raise WrongFormat(f"{fmt} is not a boundary format")
    return tuple([k for k in live if k != j] + [j])


def diagonal_monomial(f, variant: str = "closed", cap: int | None = None) -> Monomial:
    """The product of a_{I(Q)} over Q in C.

    ``closed``: I(Q) is read over the initial diagram of Q in the format itself.
    ``boundary``: the format must be of boundary type; the distinguished
    direction carries j(Q) and every other direction reads the diagram.
    """
    dims = _dims(f)
    if variant == "closed":
        return mono_from_vars(closed_index(Q) for Q in enumerate_levels(dims, cap))
    if variant != "boundary":
        raise ValueError(f"unknown variant {variant!r}")
    frame = boundary_frame(dims)
    inner = tuple(dims[k - 1] for k in frame[:-1])
    out = []
    for Q in enumerate_levels(inner, cap):
        idx_frame = closed_index(Q) + (j_of(Q),)
        full = [1] * len(dims)
        for pos, k in enumerate(frame):
            full[k - 1] = idx_frame[pos]
        out.append(tuple(full))
    return mono_from_vars(out)


# -- ASCII rendering -------------------------------------------------------------

def render_diagram(Q: Sequence[Sequence[int]], g: Sequence[Sequence[int]] | None = None) -> str:
    """Rows P_d (top) down to P_0; 'x' marks Q_k, '*' the path, digits the labels of g_{k+1}."""
    Q = tuple(tuple(s) for s in Q)
    g = initial_diagram(Q) if g is None else g
    p = q_path(Q)
    lines = []
    m = 1
    sizes = [1]
    for Qk in Q:
        m += len(Qk)
        sizes.append(m)
    for k in reversed(range(len(Q) + 1)):
        cells = []
        for x in range(1, sizes[k] + 1):
            mark = "x" if k > 0 and x in Q[k - 1] else ("*" if x == p[k] else ".")
            label = str(g[k][x - 1]) if k < len(Q) else " "
            cells.append(mark + label)
        lines.append(f"P{k}: " + " ".join(cells))
    lines.append("path: " + path_steps(Q))
    return "\n".join(lines)
