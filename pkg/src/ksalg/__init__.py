"""Kauffman-states dg algebras over F2: canonical-basis arithmetic, quiver
presentations, gradings, symmetries, exact graded homology, and Massey
formality certificates, at desk scale."""

from .algebra import (
    AlgebraContext,
    BasisElement,
    Element,
    Flavor,
    GradingVector,
    differential,
    gen_f,
    gen_sum,
    graded_piece_basis,
    grading,
    multiply,
)
from .istates import (
    FarPair,
    IState,
    classify_intervals,
    enumerate_istates,
    is_far,
    subadditivity_defect,
    weight_vector,
)

__all__ = [
    "AlgebraContext",
    "BasisElement",
    "Element",
    "Flavor",
    "GradingVector",
    "FarPair",
    "IState",
    "classify_intervals",
    "differential",
    "enumerate_istates",
    "gen_f",
    "gen_sum",
    "graded_piece_basis",
    "grading",
    "is_far",
    "multiply",
    "subadditivity_defect",
    "weight_vector",
]

__version__ = "0.1.0"
