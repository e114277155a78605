"""
Символьные матрицы X (общая, симметрическая, кососимметрическая),
столбец Y = (y1, ..., yn)^t и производные многочлены: элементы g_i
произведения XY, определитель, алгебраические дополнения и миноры
с вычеркнутой строкой.
"""
from enum import Enum
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from apps.algebra.coeff import QQ, Field
from apps.algebra.exceptions import ShapeError
from apps.algebra.ring import Polynomial, PolynomialRing, Variable


class MatrixKind(str, Enum):
    GENERIC = "generic"
    SYMMETRIC = "symmetric"
    SKEW = "skew"

    @classmethod
    def parse(cls, value) -> "MatrixKind":
        if isinstance(value, cls):
            return value
        normalized = str(value).strip().lower().replace("_", "-")
        if normalized in ("skew-symmetric", "skewsymmetric"):
            return cls.SKEW
        try:
            return cls(normalized)
        except ValueError:
            raise ShapeError(f"Неизвестный тип матрицы: {value!r}") from None


def matrix_variables(kind: MatrixKind, m: int, n: int) -> List[Variable]:
    """Переменные кольца: x построчно (с учётом симметрии), затем y1..yn"""
    if kind is MatrixKind.GENERIC:
        xs = [Variable.x(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    elif kind is MatrixKind.SYMMETRIC:
        xs = [Variable.x(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    else:
        xs = [Variable.x(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return xs + [Variable.y(j) for j in range(1, n + 1)]


class SymbolicMatrix:
    def __init__(self, kind: MatrixKind, m: int, n: int, field: Field = QQ):
        kind = MatrixKind.parse(kind)
        if m < 1 or n < 1:
            raise ShapeError(f"Размеры матрицы должны быть положительными: {m}x{n}")
        if kind is not MatrixKind.GENERIC and m != n:
            raise ShapeError(f"Матрица типа {kind.value} должна быть квадратной, получено {m}x{n}")
        self.kind = kind
        self.m = m
        self.n = n
        self.ring = PolynomialRing(field, matrix_variables(kind, m, n))
        self._minors: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Polynomial] = {}

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def entry(self, i: int, j: int) -> Polynomial:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise ShapeError(f"Индекс ({i}, {j}) вне матрицы {self.m}x{self.n}")
        if self.kind is MatrixKind.GENERIC:
            return self.ring.x(i, j)
        if self.kind is MatrixKind.SYMMETRIC:
            return self.ring.x(min(i, j), max(i, j))
        if i == j:
            return self.ring.zero
        # кососимметрическая: хранится только x(i, j) при i < j
        return self.ring.x(i, j) if i < j else -self.ring.x(j, i)

    def rows(self) -> List[List[Polynomial]]:
        return [[self.entry(i, j) for j in range(1, self.n + 1)] for i in range(1, self.m + 1)]

    @cached_property
    def y(self) -> List[Polynomial]:
        return [self.ring.y(j) for j in range(1, self.n + 1)]

    def xy_entries(self) -> List[Polynomial]:
        """g_i = sum_k entry(i, k) * y_k"""
        return list(self._xy_entries)

    @cached_property
    def _xy_entries(self) -> Tuple[Polynomial, ...]:
        result = []
        for i in range(1, self.m + 1):
            g = self.ring.zero
            for k in range(1, self.n + 1):
                g = g + self.entry(i, k) * self.y[k - 1]
            result.append(g)
        return tuple(result)

    def g(self, i: int) -> Polynomial:
        return self._xy_entries[i - 1]

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
        """Определитель подматрицы; разложение по первой строке с мемоизацией"""
        rows, cols = tuple(rows), tuple(cols)
        if len(rows) != len(cols):
            raise ShapeError("Минор требует одинакового числа строк и столбцов")
        key = (rows, cols)
        cached = self._minors.get(key)
        if cached is not None:
            return cached
        if not rows:
            result = self.ring.one
        else:
            result = self.ring.zero
            head, rest = rows[0], rows[1:]
            for position, col in enumerate(cols):
                entry = self.entry(head, col)
                if not entry:
                    continue
                sub = self.minor(rest, cols[:position] + cols[position + 1:])
                term = entry * sub
                result = result - term if position % 2 else result + term
        self._minors[key] = result
        return result

    def determinant(self) -> Polynomial:
        if not self.is_square:
            raise ShapeError(f"Определитель требует квадратной матрицы, получено {self.m}x{self.n}")
        return self.minor(range(1, self.n + 1), range(1, self.n + 1))

    def cofactor(self, j: int, i: int) -> Polynomial:
        """A_ji: знаковый дополнительный минор к элементу (j, i)"""
        if not self.is_square:
            raise ShapeError("Алгебраическое дополнение определено только для квадратной матрицы")
        rows = [r for r in range(1, self.m + 1) if r != j]
        cols = [c for c in range(1, self.n + 1) if c != i]
        value = self.minor(rows, cols)
        return -value if (i + j) % 2 else value

    def row_deleted_minor(self, i: int) -> Polynomial:
        """Δ_i: максимальный минор без i-й строки (матрица (n+1) x n)"""
        if self.m != self.n + 1:
            raise ShapeError(f"Минор без строки требует матрицы (n+1) x n, получено {self.m}x{self.n}")
        if not 1 <= i <= self.m:
            raise ShapeError(f"Строка {i} вне матрицы")
        return self.minor([r for r in range(1, self.m + 1) if r != i], range(1, self.n + 1))

    def row_deleted_minors(self) -> List[Polynomial]:
        return [self.row_deleted_minor(i) for i in range(1, self.m + 1)]

    def macros(self) -> Dict[str, Polynomial]:
        """Подстановки для текстового ввода: g[i], det, minor[i]"""
        result = {f"g[{i}]": g for i, g in enumerate(self._xy_entries, start=1)}
        if self.is_square:
            result["det"] = self.determinant()
        if self.m == self.n + 1:
            result.update({f"minor[{i}]": d for i, d in enumerate(self.row_deleted_minors(), start=1)})
        return result

    def to_text(self) -> str:
        cells = [[e.to_text() for e in row] for row in self.rows()]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self):
        return f"<SymbolicMatrix {self.kind.value} {self.m}x{self.n} над {self.ring.field.name}>"


def build(kind, m: int, n: int, field: Field = QQ) -> SymbolicMatrix:
    return SymbolicMatrix(MatrixKind.parse(kind), m, n, field)
