"""
Сертификат регулярной последовательности: старшие термы g_i попарно
взаимно просты в специально построенном lex-порядке.
"""
from apps.algebra.detlab import MatrixKind
from apps.algebra.exceptions import ShapeError
from apps.algebra.groebner import is_groebner, pairwise_coprime
from apps.algebra.ring import diagonal_order, superdiagonal_order
from ..harness import CheckOptions, guarded
from ..report import ClaimId, Report


def validate_regular_sequence(kind, m: int, n: int) -> MatrixKind:
    kind = MatrixKind.parse(kind)
    if m < 1 or n < 1:
        raise ShapeError(f"Размеры должны быть положительными, получено {m}x{n}")
    if kind is MatrixKind.GENERIC and m > n:
        raise ShapeError(f"Для общей матрицы требуется m <= n, получено {m}x{n}")
    if kind is not MatrixKind.GENERIC and m != n:
        raise ShapeError(f"Матрица {kind.value} должна быть квадратной, получено {m}x{n}")
    if kind is MatrixKind.SKEW and n < 2:
        raise ShapeError("Кососимметрическая последовательность g_1..g_{n-1} пуста при n < 2")
    return kind


def check_regular_sequence(kind, m: int, n: int, options: CheckOptions = CheckOptions()) -> Report:
    kind = validate_regular_sequence(kind, m, n)
    report = Report(ClaimId.REGULAR_SEQUENCE, {"kind": kind.value, "m": m, "n": n})

    with guarded(report, options):
        matrix = options.matrix(kind, m, n)
        if kind is MatrixKind.SKEW:
            order = superdiagonal_order(matrix.ring, n)
            sequence = matrix.xy_entries()[: n - 1]
            expected = [matrix.entry(i, i + 1) * matrix.y[i] for i in range(1, n)]
        else:
            order = diagonal_order(matrix.ring, m)
            sequence = matrix.xy_entries()
            expected = [matrix.entry(i, i) * matrix.y[i - 1] for i in range(1, m + 1)]
        report.use_order(order)

        leading = [g.leading_monomial(order) for g in sequence]
        report.witness("leading_terms", [matrix.ring.monomial(lt) for lt in leading])

        coprime, failing = pairwise_coprime(sequence, order)
        detail = "" if coprime else f"пара g[{failing[0] + 1}], g[{failing[1] + 1}]"
        report.check("leading terms pairwise coprime", coprime, detail)
        report.check(
            "leading terms x[i][i]*y[i] pattern",
            leading == [p.leading_monomial(order) for p in expected],
        )
        # взаимно простые старшие термы дают базис Грёбнера без редукций
        report.check("sequence is a Groebner basis", bool(is_groebner(sequence, order)))
    return report.finish()
