from .basis import CriterionResult, GroebnerBasis
from .buchberger import buchberger, is_groebner
from .budget import DEFAULT_MAX_PAIRS, Budget, GBStats
from .criteria import coprime_leading_terms, pairwise_coprime
from .division import DivisionResult, normal_form, reduce
from .spoly import s_polynomial

__all__ = [
    "DEFAULT_MAX_PAIRS",
    "Budget",
    "CriterionResult",
    "DivisionResult",
    "GBStats",
    "GroebnerBasis",
    "buchberger",
    "coprime_leading_terms",
    "is_groebner",
    "normal_form",
    "pairwise_coprime",
    "reduce",
    "s_polynomial",
]
