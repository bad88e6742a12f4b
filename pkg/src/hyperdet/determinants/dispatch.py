"""Method routing by format class."""

from __future__ import annotations

from ..errors import GrassmanFormat, Unsupported
from ..mdmatrix import Format, Kind, MDMatrix, classify_format
from .. import qpaths
from .boundary import Theorem321Policy, clear_boundary_caches, det_boundary
from .pencil import det_pencil_nn2, pencil_formal, pencil_frame, universal_discriminant
from .result import DetResult
from .square import det_2d, leibniz


def method_for(fmt) -> str:
    fmt = fmt if isinstance(fmt, Format) else Format(tuple(fmt))
    cls = classify_format(fmt)
    if cls.kind is Kind.SQUARE2D:
        return "square"
    if cls.kind is Kind.BOUNDARY:
        return "boundary"
    if cls.kind is Kind.GRASSMAN:
        raise GrassmanFormat(f"{fmt} has no determinant; use plucker for its boundary minors")
    if pencil_frame(fmt.dims) is not None:
        return "pencil"
    raise Unsupported(f"no determinant method for the inner format {fmt}")


def det_dispatch(a: MDMatrix, policy: Theorem321Policy | None = None, workers: int = 1,
                 max_terms: int | None = None) -> DetResult:
    method = method_for(a.format)
    if method == "square":
        return det_2d(a)
    if method == "pencil":
        return det_pencil_nn2(a)
    return det_boundary(a, policy, workers, max_terms)


def clear_caches() -> None:
    """Drop every memoized formal determinant and combinatorial table.

    Results never depend on the caches; this exists so timings can be taken cold.
    """
    clear_boundary_caches()
    for fn in (pencil_formal, universal_discriminant, leibniz, qpaths._fiber_maps, qpaths._qspace):
        fn.cache_clear()
