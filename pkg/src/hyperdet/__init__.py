"""Exact determinants (hyperdeterminants) of multidimensional matrices."""

from .mdmatrix import (
    DegeneracyWitness,
    Format,
    FormatClass,
    Kind,
    MDMatrix,
    classify_format,
    enumerate_minor_subformats,
    load_matrix,
    m_sequence,
    random_rational,
    symbolic,
)

__version__ = "0.1.0"

__all__ = [
    "DegeneracyWitness", "Format", "FormatClass", "Kind", "MDMatrix", "classify_format",
    "enumerate_minor_subformats", "load_matrix", "m_sequence", "random_rational", "symbolic",
]
