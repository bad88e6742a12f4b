"""Determinants of multidimensional matrices and the oracles that check them."""

from .boundary import (
    ALL_POLICIES,
    SHIPPED_POLICY,
    Theorem321Policy,
    boundary_formal,
    calibrate,
    check_policy,
    degree_boundary,
    det_boundary,
    shipped_policy,
)
from .closed import MinorFactor, QuotientReport, closed_det, minors, quotient_identity_check
from .dispatch import clear_caches, det_dispatch, method_for
from .grassman import (
    CorankReport,
    PluckerVector,
    RankDrop,
    RankDropWitness,
    corank_22n,
    hyperplucker,
    maximal_minors_pencil,
    pencil_rank_drop_oracle,
)
from .oracles import critical_system, make_degenerate, witness_check
from .pencil import det_pencil_nn2, pencil_anchor
from .result import DetResult, Normalization, normalize
from .square import det_2d
from .transforms import gl_action, random_unimodular
from .verify import VerifyReport, verify_format

__all__ = [
    "ALL_POLICIES", "SHIPPED_POLICY", "Theorem321Policy", "boundary_formal", "calibrate",
    "check_policy", "degree_boundary", "det_boundary", "shipped_policy", "MinorFactor",
    "QuotientReport", "closed_det", "minors", "quotient_identity_check", "clear_caches", "det_dispatch",
    "method_for", "CorankReport", "PluckerVector", "RankDrop", "RankDropWitness", "corank_22n",
    "hyperplucker", "maximal_minors_pencil", "pencil_rank_drop_oracle", "critical_system",
    "make_degenerate", "witness_check", "det_pencil_nn2", "pencil_anchor", "DetResult",
    "Normalization", "normalize", "det_2d", "gl_action", "random_unimodular", "VerifyReport",
    "verify_format",
]
