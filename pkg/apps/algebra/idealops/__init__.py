from .ideal import Ideal
from .macaulay import macaulay_member, monomials_up_to
from .operations import (
    basis_stats,
    bracket,
    contains,
    eliminate,
    equal,
    exact_quotient,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    member,
    quotient,
    saturate,
    saturate_iterated,
    squarefree_lt_radical_witness,
    tower_coefficients,
)

__all__ = [
    "Ideal",
    "basis_stats",
    "bracket",
    "contains",
    "eliminate",
    "equal",
    "exact_quotient",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "intersect",
    "macaulay_member",
    "member",
    "monomials_up_to",
    "quotient",
    "saturate",
    "saturate_iterated",
    "squarefree_lt_radical_witness",
    "tower_coefficients",
]
