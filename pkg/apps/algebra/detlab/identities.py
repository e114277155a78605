from apps.algebra.exceptions import ShapeError
from .matrices import MatrixKind, SymbolicMatrix


def cofactor_sum(matrix: SymbolicMatrix, i: int, k: int):
    """sum_j A_ji * entry(j, k): Δ при k = i и 0 иначе"""
    total = matrix.ring.zero
    for j in range(1, matrix.n + 1):
        total = total + matrix.cofactor(j, i) * matrix.entry(j, k)
    return total


def alien_cofactor_check(matrix: SymbolicMatrix, i: int, k: int) -> bool:
    expected = matrix.determinant() if i == k else matrix.ring.zero
    return cofactor_sum(matrix, i, k) == expected


def cofactor_identity_check(matrix: SymbolicMatrix, i: int) -> bool:
    """Δ * y_i = sum_j A_ji * g_j"""
    if not matrix.is_square:
        raise ShapeError("Тождество с дополнениями требует квадратной матрицы")
    combination = matrix.ring.zero
    for j, g in enumerate(matrix.xy_entries(), start=1):
        combination = combination + matrix.cofactor(j, i) * g
    return not (matrix.determinant() * matrix.y[i - 1] - combination)


def skew_quadratic_form(matrix: SymbolicMatrix):
    """Y^t X Y = sum_i y_i * g_i"""
    total = matrix.ring.zero
    for y, g in zip(matrix.y, matrix.xy_entries()):
        total = total + y * g
    return total


def skew_relation_check(matrix: SymbolicMatrix) -> bool:
    """y_n * g_n = sum_{i<n} (-y_i) * g_i"""
    if matrix.kind is not MatrixKind.SKEW:
        raise ShapeError("Соотношение проверяется только для кососимметрической матрицы")
    g = matrix.xy_entries()
    y = matrix.y
    right = matrix.ring.zero
    for i in range(matrix.n - 1):
        right = right + (-y[i]) * g[i]
    return y[-1] * g[-1] == right
