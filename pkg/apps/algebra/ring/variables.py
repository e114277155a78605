from dataclasses import dataclass, field
from enum import Enum
from typing import Optional


class VariableKind(str, Enum):
    X = "x"
    Y = "y"
    AUX = "aux"


@dataclass(frozen=True, order=False)
class Variable:
    """
    Переменная кольца: x(i, j), y(j) или вспомогательная переменная
    исключения (t, z, ...).

    Пара (kind, row, col) однозначно задаёт x- и y-переменные,
    вспомогательные переменные различаются по имени.
    """

    kind: VariableKind
    row: int = 0
    col: int = 0
    name: Optional[str] = field(default=None)

    @classmethod
    def x(cls, i: int, j: int) -> "Variable":
        if i < 1 or j < 1:
            raise ValueError(f"Индексы x[{i}][{j}] должны быть положительными")
        return cls(VariableKind.X, i, j)

    @classmethod
    def y(cls, j: int) -> "Variable":
        if j < 1:
            raise ValueError(f"Индекс y[{j}] должен быть положительным")
        return cls(VariableKind.Y, 0, j)

    @classmethod
    def aux(cls, name: str) -> "Variable":
        return cls(VariableKind.AUX, name=name)

    def __str__(self):
        if self.kind is VariableKind.X:
            return f"x[{self.row}][{self.col}]"
        if self.kind is VariableKind.Y:
            return f"y[{self.col}]"
        return self.name

    def __repr__(self):
        return f"Variable({self})"
