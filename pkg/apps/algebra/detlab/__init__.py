from .identities import (
    alien_cofactor_check,
    cofactor_identity_check,
    cofactor_sum,
    skew_quadratic_form,
    skew_relation_check,
)
from .matrices import MatrixKind, SymbolicMatrix, build, matrix_variables

__all__ = [
    "MatrixKind",
    "SymbolicMatrix",
    "alien_cofactor_check",
    "build",
    "cofactor_identity_check",
    "cofactor_sum",
    "matrix_variables",
    "skew_quadratic_form",
    "skew_relation_check",
]
