"""Chromatic polynomials of signed graphs and the type B Hodge decomposition
of their coloring complexes, in exact rational arithmetic."""

from .coloring_complex import ColoringComplex, Face, coloring_complex
from .group_algebra import AlgebraElement, eulerian_idempotent
from .hodge import HodgeReport, verify_main_theorem
from .hyperoctahedral import SignedPermutation
from .ratmat import IntPolynomial, QMatrix
from .signed_graph import SignedGraph, chromatic_polynomial, parse_graph

__all__ = [
    "AlgebraElement",
    "ColoringComplex",
    "Face",
    "HodgeReport",
    "IntPolynomial",
    "QMatrix",
    "SignedGraph",
    "SignedPermutation",
    "chromatic_polynomial",
    "coloring_complex",
    "eulerian_idempotent",
    "parse_graph",
    "verify_main_theorem",
]
