"""
Скобочные идеалы: насыщение <g_1..g_t> по y_n и совпадение с самим идеалом,
а также свидетельства к утверждениям о простоте.
"""
from typing import List

from apps.algebra.detlab import MatrixKind, SymbolicMatrix
from apps.algebra.exceptions import ShapeError
from apps.algebra.idealops import Ideal, bracket, equal, tower_coefficients
from apps.algebra.ring import Polynomial, Variable
from ..harness import CheckOptions, collect_stats, guarded
from ..report import ClaimId, Report, Status

PRIMALITY_NOTE = (
    "простота скобочного идеала не вычисляется: статус основан на опубликованном "
    "доказательстве, приложены проверенные равенства насыщений"
)


def tower(matrix: SymbolicMatrix, t: int) -> List[Variable]:
    """Переменные башни x[1][n], ..., x[t][n]: в g_i переменная x[i][n] входит с коэффициентом y_n"""
    return [Variable.x(i, matrix.n) for i in range(1, t + 1)]


def bracket_of(matrix: SymbolicMatrix, t: int, budget) -> Ideal:
    generators = matrix.xy_entries()[:t]
    return bracket(generators, tower_coefficients(generators, tower(matrix, t)), budget)


def _first_outside(saturation: Ideal, base: Ideal, budget) -> Polynomial:
    for h in saturation.groebner(budget=budget):
        if not base.contains(h, budget=budget):
            return h
    return None


def _boundary(kind: MatrixKind, n: int) -> int:
    return n - 1 if kind is MatrixKind.SKEW else n


def validate_saturated(kind, n: int, t: int) -> MatrixKind:
    kind = MatrixKind.parse(kind)
    if n < 1:
        raise ShapeError("n должно быть положительным")
    limit = _boundary(kind, n)
    if not 1 <= t <= limit:
        raise ShapeError(f"Недопустимое t={t} для {kind.value} n={n} (ожидается 1..{limit})")
    return kind


def validate_primality(kind, m: int, n: int) -> MatrixKind:
    kind = MatrixKind.parse(kind)
    if kind is MatrixKind.SKEW:
        raise ShapeError("Свидетельства простоты строятся для общей и симметрической матриц")
    if m < 1 or m > n or (kind is MatrixKind.SYMMETRIC and m != n):
        raise ShapeError(f"Недопустимая форма {m}x{n} для {kind.value}")
    return kind


def check_saturated(kind, n: int, t: int, options: CheckOptions = CheckOptions()) -> Report:
    """
    [g_1..g_t] = <g_1..g_t> при t <= n-1 (t <= n-2 для кососимметрической).
    Граничный случай t = n (t = n-1) обязан опровергаться: насыщение
    добавляет det (соответственно g_n).
    """
    kind = validate_saturated(kind, n, t)
    report = Report(ClaimId.SATURATED, {"kind": kind.value, "n": n, "t": t})

    with guarded(report, options) as budget:
        matrix = options.matrix(kind, n, n)
        base = Ideal(matrix.ring, matrix.xy_entries()[:t])
        saturation = bracket_of(matrix, t, budget)
        report.use_order(base.canonical_order)
        report.witness("saturation_basis", list(saturation.groebner(budget=budget)))

        saturated = report.check("saturation by y[n] equals the ideal", equal(saturation, base, budget))
        if not saturated and t == _boundary(kind, n):
            name, missing = ("g[n]", matrix.g(n)) if kind is MatrixKind.SKEW else ("det", matrix.determinant())
            inside = report.check(
                f"{name} lies in the saturation", saturation.contains(missing, budget=budget), evidence=True
            )
            outside = report.check(
                f"{name} lies outside the ideal", not base.contains(missing, budget=budget), evidence=True
            )
            if inside and outside:
                report.witness("counterexample", missing)
        if not saturated and "counterexample" not in report.witnesses:
            report.witness("counterexample", _first_outside(saturation, base, budget))
        report.notes.append(PRIMALITY_NOTE)
        collect_stats(report, base, saturation)
    return report.finish()


def check_primality(kind, m: int, n: int, options: CheckOptions = CheckOptions()) -> Report:
    """
    Простота не доказывается вычислением. Для квадратной матрицы
    прилагается [g_1..g_n] = <g_1..g_n, det>, для общей m < n -
    [g_1..g_m] = <g_1..g_m>.
    """
    kind = validate_primality(kind, m, n)
    report = Report(ClaimId.PRIMALITY, {"kind": kind.value, "m": m, "n": n})

    with guarded(report, options) as budget:
        matrix = options.matrix(kind, m, n)
        saturation = bracket_of(matrix, m, budget)
        report.use_order(saturation.canonical_order)
        if matrix.is_square:
            target = Ideal(matrix.ring, matrix.xy_entries() + [matrix.determinant()])
            name = "bracket equals <g, det>"
        else:
            target = Ideal(matrix.ring, matrix.xy_entries())
            name = "bracket equals <g>"
        report.check(name, equal(saturation, target, budget))
        report.witness("bracket_basis", list(saturation.groebner(budget=budget)))
        report.notes.append(PRIMALITY_NOTE)
        collect_stats(report, saturation, target)
    return report.finish(success=Status.PAPER_CITED)
