"""
Мономы как разреженные векторы показателей.

Индекс переменной плотный: он назначается кольцом при построении
(x построчно, затем y, затем вспомогательные переменные).
"""
from typing import Dict, Iterable, Tuple


class ExponentVector(tuple):
    """
    Кортеж пар (индекс, показатель), отсортированный по индексу,
    без нулевых показателей. Единичный моном - пустой кортеж.
    """

    __slots__ = ()

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "ExponentVector":
        merged: Dict[int, int] = {}
        for index, exponent in pairs:
            if exponent < 0:
                raise ValueError("Показатель монома не может быть отрицательным")
            merged[index] = merged.get(index, 0) + exponent
        return cls(sorted((i, e) for i, e in merged.items() if e))

    @classmethod
    def variable(cls, index: int, exponent: int = 1) -> "ExponentVector":
        return cls(((index, exponent),)) if exponent else ONE

    def exponent(self, index: int) -> int:
        for i, e in self:
            if i == index:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self)

    def __mul__(self, other: "ExponentVector") -> "ExponentVector":
        if not self:
            return other
        if not other:
            return self
        result = []
        a, b = iter(self), iter(other)
        x, y = next(a, None), next(b, None)
        while x is not None and y is not None:
            if x[0] == y[0]:
                result.append((x[0], x[1] + y[1]))
                x, y = next(a, None), next(b, None)
            elif x[0] < y[0]:
                result.append(x)
                x = next(a, None)
            else:
                result.append(y)
                y = next(b, None)
        while x is not None:
            result.append(x)
            x = next(a, None)
        while y is not None:
            result.append(y)
            y = next(b, None)
        return ExponentVector(result)

    def __pow__(self, k: int) -> "ExponentVector":
        return ExponentVector((i, e * k) for i, e in self) if k else ONE

    def divides(self, other: "ExponentVector") -> bool:
        exps = dict(other)
        return all(exps.get(i, 0) >= e for i, e in self)

    def __truediv__(self, other: "ExponentVector") -> "ExponentVector":
        exps = dict(self)
        for i, e in other:
            rest = exps.get(i, 0) - e
            if rest < 0:
                raise ValueError(f"Моном {other!r} не делит {self!r}")
            exps[i] = rest
        return ExponentVector(sorted((i, e) for i, e in exps.items() if e))

    def lcm(self, other: "ExponentVector") -> "ExponentVector":
        exps = dict(self)
        for i, e in other:
            if e > exps.get(i, 0):
                exps[i] = e
        return ExponentVector(sorted(exps.items()))

    def is_coprime(self, other: "ExponentVector") -> bool:
        mine = {i for i, _ in self}
        return not any(i in mine for i, _ in other)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self)

    def max_index(self) -> int:
        return self[-1][0] if self else -1

    def __repr__(self):
        return f"ExponentVector({tuple(self)!r})"


ONE = ExponentVector()
