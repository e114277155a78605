from .fields import (
    DEFAULT_PRIME,
    QQ,
    Field,
    PrimeField,
    Rational,
    RationalField,
    field_from_spec,
)
from .prime_field import PrimeFieldElement

__all__ = [
    "DEFAULT_PRIME",
    "QQ",
    "Field",
    "PrimeField",
    "PrimeFieldElement",
    "Rational",
    "RationalField",
    "field_from_spec",
]
