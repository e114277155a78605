from apps.algebra.detlab import MatrixKind
from apps.algebra.exceptions import ShapeError
from apps.algebra.idealops import Ideal, member
from ..harness import CheckOptions, collect_stats, guarded
from ..report import ClaimId, Report


def validate_nonprime_witness(kind, n: int) -> MatrixKind:
    kind = MatrixKind.parse(kind)
    if n < 1:
        raise ShapeError("n должно быть положительным")
    if kind is MatrixKind.SKEW and n < 2:
        raise ShapeError("Для кососимметрической матрицы требуется n >= 2")
    return kind


def check_nonprime_witness(kind, n: int, options: CheckOptions = CheckOptions()) -> Report:
    """
    Произведение в идеале, сомножители вне его: det*y[n] для общей и
    симметрической матрицы, y[n]*g[n] в <g_1..g_{n-1}> для кососимметрической.
    """
    kind = validate_nonprime_witness(kind, n)
    report = Report(ClaimId.NONPRIME_WITNESS, {"kind": kind.value, "n": n})

    with guarded(report, options) as budget:
        matrix = options.matrix(kind, n, n)
        y_n = matrix.y[-1]
        if kind is MatrixKind.SKEW:
            ideal = Ideal(matrix.ring, matrix.xy_entries()[: n - 1])
            factor, name = matrix.g(n), "g[n]"
        else:
            ideal = Ideal(matrix.ring, matrix.xy_entries())
            factor, name = matrix.determinant(), "det"
        report.use_order(ideal.canonical_order)

        report.check(f"y[n]*{name} in ideal", member(y_n * factor, ideal, budget))
        report.check(f"{name} not in ideal", not member(factor, ideal, budget))
        report.check("y[n] not in ideal", not member(y_n, ideal, budget))
        report.witness("product", y_n * factor)
        report.witness("factors", [factor, y_n])
        collect_stats(report, ideal)
    return report.finish()
