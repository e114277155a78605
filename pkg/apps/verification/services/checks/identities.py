from apps.algebra.detlab import (
    MatrixKind,
    alien_cofactor_check,
    cofactor_identity_check,
    skew_quadratic_form,
    skew_relation_check,
)
from apps.algebra.exceptions import ShapeError
from ..harness import CheckOptions, guarded
from ..report import ClaimId, Report


def validate_cofactor_identity(kind, n: int) -> MatrixKind:
    kind = MatrixKind.parse(kind)
    if n < 1:
        raise ShapeError("n должно быть положительным")
    return kind


def validate_skew_relation(n: int) -> None:
    if n < 1:
        raise ShapeError("n должно быть положительным")


def check_cofactor_identity(kind, n: int, options: CheckOptions = CheckOptions()) -> Report:
    kind = validate_cofactor_identity(kind, n)
    report = Report(ClaimId.COFACTOR_IDENTITY, {"kind": kind.value, "n": n})
    with guarded(report, options):
        matrix = options.matrix(kind, n, n)
        for i in range(1, n + 1):
            report.check(f"det*y[{i}] = sum_j A[j][{i}]*g[j]", cofactor_identity_check(matrix, i))
        aliens = [(i, k) for i in range(1, n + 1) for k in range(1, n + 1) if i != k]
        failing = [pair for pair in aliens if not alien_cofactor_check(matrix, *pair)]
        report.check("alien cofactor sums vanish", not failing, ", ".join(map(str, failing)))
    return report.finish()


def check_skew_relation(n: int, options: CheckOptions = CheckOptions()) -> Report:
    validate_skew_relation(n)
    report = Report(ClaimId.SKEW_RELATION, {"n": n})
    with guarded(report, options):
        matrix = options.matrix(MatrixKind.SKEW, n, n)
        report.check("y[n]*g[n] = -sum_{i<n} y[i]*g[i]", skew_relation_check(matrix))
        form = skew_quadratic_form(matrix)
        report.check("Y^t X Y = 0", not form, form.to_text())
    return report.finish()
