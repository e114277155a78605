from .monomials import ONE, ExponentVector
from .orders import (
    MonomialOrder,
    Ordering,
    compare,
    complete_order,
    diagonal_order,
    elimination_order,
    moved_y_order,
    superdiagonal_order,
    y_first_order,
)
from .parser import MAX_EXPONENT, Document, parse, parse_document, parse_order, parse_polynomial
from .polynomial import Polynomial, leading_term, poly_add, poly_mul, poly_sum, univariate_lead
from .polynomial_ring import PolynomialRing
from .variables import Variable, VariableKind

__all__ = [
    "MAX_EXPONENT",
    "ONE",
    "Document",
    "ExponentVector",
    "MonomialOrder",
    "Ordering",
    "Polynomial",
    "PolynomialRing",
    "Variable",
    "VariableKind",
    "compare",
    "complete_order",
    "diagonal_order",
    "elimination_order",
    "leading_term",
    "moved_y_order",
    "parse",
    "parse_document",
    "parse_order",
    "parse_polynomial",
    "poly_add",
    "poly_mul",
    "poly_sum",
    "superdiagonal_order",
    "univariate_lead",
    "y_first_order",
]
