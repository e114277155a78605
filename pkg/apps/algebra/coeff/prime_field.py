from fractions import Fraction
from typing import Union

from apps.algebra.exceptions import DivisionByZeroError, ModulusMismatchError


class PrimeFieldElement:
    """
    Элемент поля GF(p).

    Вычет всегда приведён в [0, p); операции с элементом другого поля
    (другой модуль или рациональное число) запрещены.
    """

    __slots__ = ("residue", "modulus")

    def __init__(self, value: int, modulus: int):
        self.residue = value % modulus
        self.modulus = modulus

    def _residue_of(self, other) -> Union[int, type(NotImplemented)]:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    f"Смешение полей GF({self.modulus}) и GF({other.modulus})"
                )
            return other.residue
        if isinstance(other, Fraction):
            raise ModulusMismatchError(f"Рациональное число {other} не является элементом GF({self.modulus})")
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.modulus
        return NotImplemented

    def _make(self, residue: int) -> "PrimeFieldElement":
        return PrimeFieldElement(residue, self.modulus)

    def __add__(self, other):
        r = self._residue_of(other)
        if r is NotImplemented:
            return r
        return self._make(self.residue + r)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._residue_of(other)
        if r is NotImplemented:
            return r
        return self._make(self.residue - r)

    def __rsub__(self, other):
        r = self._residue_of(other)
        if r is NotImplemented:
            return r
        return self._make(r - self.residue)

    def __mul__(self, other):
        r = self._residue_of(other)
        if r is NotImplemented:
            return r
        return self._make(self.residue * r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._residue_of(other)
        if r is NotImplemented:
            return r
        if r == 0:
            raise DivisionByZeroError(f"Деление на ноль в GF({self.modulus})")
        return self._make(self.residue * pow(r, -1, self.modulus))

    def __rtruediv__(self, other):
        r = self._residue_of(other)
        if r is NotImplemented:
            return r
        return self._make(r) / self

    def __neg__(self):
        return self._make(-self.residue)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return self._make(pow(self.residue, exponent, self.modulus))

    def inverse(self) -> "PrimeFieldElement":
        if self.residue == 0:
            raise DivisionByZeroError(f"Ноль необратим в GF({self.modulus})")
        return self._make(pow(self.residue, -1, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.residue == other.residue
        # целое равно элементу, только если оно совпадает с приведённым вычетом
        if isinstance(other, int) and not isinstance(other, bool):
            return self.residue == other
        return NotImplemented

    def __hash__(self):
        return hash(self.residue)

    def __reduce__(self):
        return (PrimeFieldElement, (self.residue, self.modulus))

    def __repr__(self):
        return f"PrimeFieldElement({self.residue}, {self.modulus})"

    def __str__(self):
        return f"{self.residue} mod {self.modulus}"
