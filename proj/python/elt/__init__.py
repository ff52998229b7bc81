"""Exact ELT linear algebra.

Scalars are strings in the grammar ``t~layer`` or ``-inf`` (for example
``"2~1"``, ``"0~1+2i"``); matrices are lists of rows of such strings.
"""

from ._elt import (
    Error,
    ParseError,
    add,
    bessel,
    cs_check,
    dependence_witness,
    desingularize,
    det,
    elt_rank,
    eltrop,
    extend_orthogonal,
    gram,
    inner,
    invert,
    is_orthogonal,
    is_singular,
    kapranov_bounds,
    lift_dependent,
    mul,
    naive_lift,
    orthogonal_vector,
    purify,
    rank,
    surpasses,
)

__all__ = [
    "Error",
    "ParseError",
    "add",
    "bessel",
    "cs_check",
    "dependence_witness",
    "desingularize",
    "det",
    "elt_rank",
    "eltrop",
    "extend_orthogonal",
    "gram",
    "inner",
    "invert",
    "is_orthogonal",
    "is_singular",
    "kapranov_bounds",
    "lift_dependent",
    "mul",
    "naive_lift",
    "orthogonal_vector",
    "purify",
    "rank",
    "surpasses",
]
