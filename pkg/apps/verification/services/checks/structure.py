"""
Строение базиса Грёбнера идеала I_1(XY) для общей квадратной матрицы
и устойчивость <g, det> относительно частных по y_i.
"""
from typing import List, Sequence

from apps.algebra.detlab import MatrixKind
from apps.algebra.exceptions import ShapeError
from apps.algebra.groebner import is_groebner, normal_form
from apps.algebra.idealops import Ideal, equal, quotient
from apps.algebra.ring import ExponentVector, Polynomial, moved_y_order, y_first_order
from ..harness import CheckOptions, collect_stats, guarded
from ..report import ClaimId, Report


def minimalize(monomials: Sequence[ExponentVector]) -> List[ExponentVector]:
    """Минимальные образующие мономиального идеала"""
    unique = sorted(set(monomials))
    return [
        m for m in unique
        if not any(other != m and other.divides(m) for other in unique)
    ]


def leading_term_family(matrix, order) -> List[ExponentVector]:
    """x11*...*x[k-1][k-1] * x[k+i][k] * y[k] при 1 <= k <= n-1, 1 <= i <= n-k, и LT(det)"""
    n = matrix.n
    family = []
    for k in range(1, n):
        diagonal = matrix.ring.one
        for j in range(1, k):
            diagonal = diagonal * matrix.entry(j, j)
        for i in range(1, n - k + 1):
            term = diagonal * matrix.entry(k + i, k) * matrix.y[k - 1]
            family.append(term.leading_monomial(order))
    family.append(matrix.determinant().leading_monomial(order))
    return family


def validate_gb_structure(n: int) -> None:
    if n < 1:
        raise ShapeError("n должно быть положительным")


def validate_quotient_stability(n: int, i: int) -> None:
    validate_gb_structure(n)
    if not 1 <= i <= n:
        raise ShapeError(f"Индекс i={i} вне диапазона 1..{n}")


def check_gb_structure(n: int, options: CheckOptions = CheckOptions()) -> Report:
    validate_gb_structure(n)
    report = Report(ClaimId.GB_STRUCTURE, {"n": n})

    with guarded(report, options) as budget:
        matrix = options.matrix(MatrixKind.GENERIC, n, n)
        ring = matrix.ring
        order = y_first_order(ring)
        report.use_order(order)
        delta, y_n = matrix.determinant(), matrix.y[-1]
        ideal = Ideal(ring, matrix.xy_entries())
        basis = ideal.groebner(order, budget)
        report.witness("basis", basis.to_text())

        product_lead = delta.leading_monomial(order) * y_n.leading_monomial(order)
        report.check(
            "LT(det*y[n]) = LT(det)*y[n]",
            (delta * y_n).leading_monomial(order) == product_lead,
        )
        report.check("det*y[n] in <g>", basis.contains(delta * y_n))
        removed = [g for g in basis if g.leading_monomial(order) == product_lead]
        report.check("exactly one basis element with leading term LT(det)*y[n]", len(removed) == 1)

        replaced: List[Polynomial] = [g for g in basis if g not in removed] + [delta.monic(order)]
        criterion = is_groebner(replaced, order)
        detail = ""
        if not criterion:
            detail = f"остаток {criterion.remainder.to_text(order)}"
        report.check("replaced set is a Groebner basis", bool(criterion), detail)

        with_det = Ideal(ring, matrix.xy_entries() + [delta])
        with_det_basis = with_det.groebner(order, budget)
        report.check(
            "replaced set generates <g, det>",
            all(with_det_basis.contains(p) for p in replaced)
            and not any(normal_form(p, replaced, order) for p in with_det.generators),
        )
        report.check(
            "minimal leading terms agree with reduced basis of <g, det>",
            minimalize([p.leading_monomial(order) for p in replaced])
            == minimalize(with_det_basis.leading_monomials()),
        )

        leading = {p.leading_monomial(order) for p in replaced}
        family = leading_term_family(matrix, order)
        missing = [m for m in family if m not in leading]
        report.check(
            "leading-term family present",
            not missing,
            ", ".join(ring.monomial(m).to_text() for m in missing),
        )
        extra = sorted(leading - set(family), key=order.heap_key)
        report.witness("leading_terms", [ring.monomial(m) for m in sorted(leading, key=order.heap_key)])
        report.witness("extra_leading_terms", [ring.monomial(m) for m in extra])
        collect_stats(report, ideal, with_det)
    return report.finish()


def check_quotient_stability(n: int, i: int, options: CheckOptions = CheckOptions()) -> Report:
    """<g, det> : y_i = <g, det>; при i != n порядок с y_i, перенесённым за остальные y"""
    validate_quotient_stability(n, i)
    report = Report(ClaimId.QUOTIENT_STABILITY, {"n": n, "i": i})

    with guarded(report, options) as budget:
        matrix = options.matrix(MatrixKind.GENERIC, n, n)
        ring = matrix.ring
        order = y_first_order(ring) if i == n else moved_y_order(ring, i)
        report.use_order(order)
        ideal = Ideal(ring, matrix.xy_entries() + [matrix.determinant()])
        y_i = matrix.y[i - 1]

        colon = quotient(ideal, y_i, budget)
        report.check(f"<g, det> : y[{i}] = <g, det>", equal(colon, ideal, budget))

        y_index = ring.index(y_i.variables()[0])
        leading = ideal.groebner(order, budget).leading_monomials()
        report.witness("y_i_free_leading_terms", all(not m.exponent(y_index) for m in leading))
        report.witness("leading_terms", [ring.monomial(m) for m in leading])
        collect_stats(report, ideal, colon)
    return report.finish()
