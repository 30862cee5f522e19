"""Reversion calculus on unit quadrics of the complex, hyperbolic and dual planes.

A reversion through a point ``p`` maps a point ``x`` of the quadric to the
second intersection of the line ``xp`` with the quadric.  Reversions are
traceless 2x2 matrices acting as Moebius maps; composing three with collinear
centers gives a fourth, which is what makes inscribed polygons through fixed
collinear points close up for every starting vertex.
"""

from .algebra import COMPLEX, DUAL, HYPERBOLIC, AlgebraKind, Duplex, conj, invert, mul, norm_sq, tolerance
from .matrix import Mat2, ReversionForm, as_reversion, mat_mul, mobius_apply, proj_equal, pseudo_unitary_defect
from .porism import (
    ChainReduction,
    Configuration,
    PorismVerdict,
    axis_add,
    chain_reduce,
    check_chain,
    check_inverted,
    closed_form_add,
    conjugate_by_inversion,
    fourth_point,
    invert_configuration,
    porism_check,
)
from .quadric import (
    CIRCLE,
    CONJUGATE_HYPERBOLA,
    HYPERBOLA,
    PARALLEL_LINES,
    Line,
    QuadricBranch,
    collinear,
    invert_point,
    quadric_point,
    second_intersection,
)
from .reversion import (
    Reversion,
    apply,
    apply_oracle,
    closing_point,
    compose_chain,
    conjugate_pair_residual,
    reduce_three,
    reversion_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraKind",
    "CIRCLE",
    "COMPLEX",
    "CONJUGATE_HYPERBOLA",
    "ChainReduction",
    "Configuration",
    "DUAL",
    "Duplex",
    "HYPERBOLA",
    "HYPERBOLIC",
    "Line",
    "Mat2",
    "PARALLEL_LINES",
    "PorismVerdict",
    "QuadricBranch",
    "Reversion",
    "ReversionForm",
    "apply",
    "apply_oracle",
    "as_reversion",
    "axis_add",
    "chain_reduce",
    "check_chain",
    "check_inverted",
    "closed_form_add",
    "closing_point",
    "collinear",
    "compose_chain",
    "conj",
    "conjugate_by_inversion",
    "conjugate_pair_residual",
    "fourth_point",
    "invert",
    "invert_configuration",
    "invert_point",
    "mat_mul",
    "mobius_apply",
    "mul",
    "norm_sq",
    "porism_check",
    "proj_equal",
    "pseudo_unitary_defect",
    "quadric_point",
    "reduce_three",
    "reversion_matrix",
    "second_intersection",
    "tolerance",
]
