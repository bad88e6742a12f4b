"""Runtime limits shared by the enumerators and the determinant engine."""

from __future__ import annotations

import os

from .errors import ParseError

DEFAULT_MAX_TERMS = 10**7
ENV_MAX_TERMS = "HYPERDET_MAX_TERMS"


def resolve_max_terms(explicit: int | None = None) -> int:
    """Explicit value, else the environment override, else the default."""
    if explicit is not None:
        return int(explicit)
    raw = os.environ.get(ENV_MAX_TERMS)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_TERMS
    try:
        return int(float(raw)) if "e" in raw.lower() else int(raw)
    except ValueError:
        raise ParseError(f"{ENV_MAX_TERMS}={raw!r} is not an integer") from None
