"""
Необходимые условия нормальной бескручёвости: для степени I^k проверяются
радикальное соотношение и отсутствие кручения по элементам вне
минимальных простых. Полная проверка (Ass(R/I^k)) не выполняется,
поэтому итоговый статус - verified-necessary.
"""
from typing import List, Optional

from apps.algebra.detlab import MatrixKind, SymbolicMatrix
from apps.algebra.exceptions import ShapeError
from apps.algebra.idealops import (
    Ideal,
    contains,
    equal,
    ideal_power,
    quotient,
    squarefree_lt_radical_witness,
)
from apps.algebra.ring import Polynomial, poly_sum
from ..harness import CheckOptions, collect_stats, guarded
from ..report import ClaimId, Report, Status

MAX_POWER = 3


def torsion_witnesses(matrix: SymbolicMatrix) -> List[Polynomial]:
    """
    det + sum(y) (sum(Δ_i) + sum(y) для (n+1) x n), а при n >= 2 ещё x[1][1]
    и последняя x-переменная. При n = 1 вторая компонента порождена
    x-переменными, и они сами лежат в минимальном простом.
    """
    ring = matrix.ring
    if matrix.is_square:
        minors = matrix.determinant()
    else:
        minors = poly_sum(matrix.row_deleted_minors(), ring)
    witnesses = []
    if matrix.n >= 2:
        x_variables = ring.x_variables()
        witnesses += [ring.var(x_variables[0]), ring.var(x_variables[-1])]
    return witnesses + [minors + poly_sum(matrix.y, ring)]


def validate_torsionfree(kind, n: int, k: int, m: Optional[int] = None) -> MatrixKind:
    kind = MatrixKind.parse(kind)
    m = n if m is None else m
    if kind is MatrixKind.SKEW:
        raise ShapeError("Набор условий строится для общей и симметрической матриц")
    if n < 1:
        raise ShapeError("n должно быть положительным")
    if m not in (n, n + 1) or (m == n + 1 and kind is not MatrixKind.GENERIC):
        raise ShapeError(f"Допустимы формы n x n и (n+1) x n (общая), получено {m}x{n}")
    if not 1 <= k <= MAX_POWER:
        raise ShapeError(f"Степень k={k} вне диапазона 1..{MAX_POWER}")
    return kind


def check_torsionfree_necessary(kind, n: int, k: int, m: Optional[int] = None,
                                options: CheckOptions = CheckOptions()) -> Report:
    kind = validate_torsionfree(kind, n, k, m)
    report = Report(ClaimId.TORSIONFREE, {"kind": kind.value, "n": n, "k": k})
    if m is not None:
        report.params["m"] = m
    m = n if m is None else m

    with guarded(report, options) as budget:
        matrix = options.matrix(kind, m, n)
        ideal = Ideal(matrix.ring, matrix.xy_entries())
        power = ideal_power(ideal, k)
        report.use_order(ideal.canonical_order)

        report.check(f"I^{k} inside I", contains(ideal, power, budget))
        report.check(
            f"g[i]^{k} in I^{k}",
            all(power.contains(g ** k, budget=budget) for g in ideal.generators),
        )
        report.check("squarefree leading terms of I", squarefree_lt_radical_witness(ideal, budget=budget))
        if k == 1:
            report.notes.append("при k = 1 набор сводится к проверке разложения I")
        if k == n and matrix.is_square:
            report.notes.append(f"при k = n условия выше дают sqrt(I^{n}) = I")

        for h in torsion_witnesses(matrix):
            colon = quotient(power, h, budget)
            report.check(f"I^{k} : ({h.to_text()}) = I^{k}", equal(colon, power, budget))
        report.witness("power_generators", len(power))
        report.witness("power_basis_size", len(power.groebner(budget=budget)))
        report.notes.append("проверены необходимые условия, а не нормальная бескручёвость целиком")
        collect_stats(report, ideal, power)
    return report.finish(success=Status.VERIFIED_NECESSARY)
