from .decomposition import (
    check_decomposition_rect,
    check_decomposition_square,
    validate_decomposition_rect,
    validate_decomposition_square,
)
from .identities import check_cofactor_identity, check_skew_relation, validate_cofactor_identity, validate_skew_relation
from .regular_sequence import check_regular_sequence, validate_regular_sequence
from .saturation import check_primality, check_saturated, validate_primality, validate_saturated
from .structure import check_gb_structure, check_quotient_stability, validate_gb_structure, validate_quotient_stability
from .torsionfree import check_torsionfree_necessary, validate_torsionfree
from .witnesses import check_nonprime_witness, validate_nonprime_witness

__all__ = [
    "check_cofactor_identity",
    "check_decomposition_rect",
    "check_decomposition_square",
    "check_gb_structure",
    "check_nonprime_witness",
    "check_primality",
    "check_quotient_stability",
    "check_regular_sequence",
    "check_saturated",
    "check_skew_relation",
    "check_torsionfree_necessary",
    "validate_cofactor_identity",
    "validate_decomposition_rect",
    "validate_decomposition_square",
    "validate_gb_structure",
    "validate_nonprime_witness",
    "validate_primality",
    "validate_quotient_stability",
    "validate_regular_sequence",
    "validate_saturated",
    "validate_skew_relation",
    "validate_torsionfree",
]
