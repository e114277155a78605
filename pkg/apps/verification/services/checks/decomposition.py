"""
Разложение I_1(XY) в пересечение двух компонент: <y_1..y_n> и
<g, det> для квадратной матрицы, <g, Δ_1..Δ_{n+1}> для матрицы (n+1) x n.
"""
from typing import Sequence

from apps.algebra.detlab import MatrixKind
from apps.algebra.exceptions import ShapeError
from apps.algebra.idealops import Ideal, contains, equal, intersect, squarefree_lt_radical_witness
from apps.algebra.ring import Polynomial
from ..harness import CheckOptions, collect_stats, guarded
from ..report import ClaimId, Report


def _cross_check(report: Report, meet: Ideal, ideal: Ideal, budget) -> None:
    report.check("intersection equals I", equal(meet, ideal, budget))
    report.check("generators of I lie in the intersection", contains(meet, ideal, budget))
    report.check("generators of the intersection lie in I", contains(ideal, meet, budget))


def _radical_witness(report: Report, ideal: Ideal, budget) -> None:
    squarefree = squarefree_lt_radical_witness(ideal, budget=budget)
    detail = ""
    if not squarefree:
        offending = [m for m in ideal.groebner(budget=budget).leading_monomials() if not m.is_squarefree()]
        detail = "старшие мономы с квадратами: " + ", ".join(ideal.ring.monomial(m).to_text() for m in offending)
        report.notes.append(f"расхождение со свидетельством радикальности: {detail}")
    report.check("squarefree leading terms of I", squarefree, detail)


def _minimal_prime_witnesses(report: Report, ideal: Ideal, factor: Polynomial, ys: Sequence[Polynomial], budget) -> None:
    products = [factor * y for y in ys]
    report.check(
        "factor*y[i] in I for every i",
        all(ideal.contains(p, budget=budget) for p in products),
    )


def validate_decomposition_square(kind, n: int) -> MatrixKind:
    kind = MatrixKind.parse(kind)
    if kind is MatrixKind.SKEW:
        raise ShapeError("Разложение проверяется для общей и симметрической матриц")
    if n < 1:
        raise ShapeError("n должно быть положительным")
    return kind


def validate_decomposition_rect(n: int) -> None:
    if n < 1:
        raise ShapeError("n должно быть положительным")


def check_decomposition_square(kind, n: int, options: CheckOptions = CheckOptions()) -> Report:
    kind = validate_decomposition_square(kind, n)
    report = Report(ClaimId.DECOMPOSITION_SQUARE, {"kind": kind.value, "n": n})

    with guarded(report, options) as budget:
        matrix = options.matrix(kind, n, n)
        ring = matrix.ring
        delta = matrix.determinant()
        ideal = Ideal(ring, matrix.xy_entries())
        linear = Ideal(ring, matrix.y)
        component = Ideal(ring, matrix.xy_entries() + [delta])
        report.use_order(ideal.canonical_order)

        meet = intersect(linear, component, budget)
        _cross_check(report, meet, ideal, budget)
        report.check("det not in <y>", not linear.contains(delta, budget=budget))
        report.check("y[n] not in <g, det>", not component.contains(matrix.y[-1], budget=budget))
        _minimal_prime_witnesses(report, ideal, delta, matrix.y, budget)
        _radical_witness(report, ideal, budget)
        report.witness("intersection_basis", list(meet.groebner(budget=budget)))
        collect_stats(report, ideal, linear, component, meet)
    return report.finish()


def check_decomposition_rect(n: int, options: CheckOptions = CheckOptions()) -> Report:
    """
    Вторая компонента берётся с g_1..g_{n+1}: с одними g_1..g_n пересечение
    отличается от I при n >= 2, что фиксируется в свидетельстве literal_component_equal.
    """
    validate_decomposition_rect(n)
    report = Report(ClaimId.DECOMPOSITION_RECT, {"n": n})

    with guarded(report, options) as budget:
        matrix = options.matrix(MatrixKind.GENERIC, n + 1, n)
        ring = matrix.ring
        minors = matrix.row_deleted_minors()
        ideal = Ideal(ring, matrix.xy_entries())
        linear = Ideal(ring, matrix.y)
        component = Ideal(ring, matrix.xy_entries() + minors)
        report.use_order(ideal.canonical_order)

        meet = intersect(linear, component, budget)
        _cross_check(report, meet, ideal, budget)
        report.check("minor[1] not in <y>", not linear.contains(minors[0], budget=budget))
        report.check("y[n] not in <g, minors>", not component.contains(matrix.y[-1], budget=budget))
        report.check(
            "minor[i]*y[j] in I for all i, j",
            all(ideal.contains(d * y, budget=budget) for d in minors for y in matrix.y),
        )
        _radical_witness(report, ideal, budget)
        report.witness("intersection_basis", list(meet.groebner(budget=budget)))

        literal = Ideal(ring, matrix.xy_entries()[:n] + minors)
        literal_meet = intersect(linear, literal, budget)
        literal_equal = equal(literal_meet, ideal, budget)
        report.witness("literal_component_equal", literal_equal)
        if not literal_equal:
            report.notes.append(f"компонента без g[{n + 1}] даёт пересечение, отличное от I")
        collect_stats(report, ideal, linear, component, meet, literal_meet)
    return report.finish()
