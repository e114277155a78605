"""
Поля коэффициентов: рациональные числа произвольной точности (по умолчанию)
и простые поля GF(p) для быстрых перекрёстных прогонов.

Рациональное число хранится как fractions.Fraction: оно всегда несократимо,
знаменатель положителен, ноль равен 0/1.
"""
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any

from sympy import GF, QQ as SYMPY_QQ, isprime

from apps.algebra.exceptions import (
    DivisionByZeroError,
    FieldError,
    ModulusMismatchError,
    ParseError,
)
from .prime_field import PrimeFieldElement

Rational = Fraction

# 2^31 - 1, простое
DEFAULT_PRIME = 2147483647

_LITERAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*(?:mod\s+(\d+))?\s*$")


class Field(ABC):
    """Абстрактное поле коэффициентов"""

    name: str = ""

    @property
    @abstractmethod
    def spec(self) -> str:
        """Текстовое имя поля для конфигурации: rationals или gf(p)"""

    @abstractmethod
    def coerce(self, value: Any):
        """Приведение int/Fraction/элемента к элементу поля"""

    @abstractmethod
    def format(self, element) -> str:
        """Текстовая форма элемента"""

    @abstractmethod
    def to_sympy(self, element):
        """Элемент домена SymPy (для оракулов)"""

    @abstractmethod
    def sympy_domain(self):
        """Домен SymPy, соответствующий полю"""

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        return self.coerce(a) + self.coerce(b)

    def sub(self, a, b):
        return self.coerce(a) - self.coerce(b)

    def mul(self, a, b):
        return self.coerce(a) * self.coerce(b)

    def div(self, a, b):
        b = self.coerce(b)
        if not b:
            raise DivisionByZeroError(f"Деление на ноль в поле {self.name}")
        return self.coerce(a) / b

    def neg(self, a):
        return -self.coerce(a)

    def inv(self, a):
        return self.div(1, a)

    def parse(self, text: str):
        """Разбор текстовой формы: -7/3, 5, 3 mod 7"""
        match = _LITERAL_RE.match(text)
        if not match:
            raise ParseError(f"Некорректная запись элемента поля: {text!r}")
        numerator, denominator, modulus = match.groups()
        if modulus is not None:
            self._accept_modulus(int(modulus))
        if denominator is None:
            return self.coerce(int(numerator))
        if int(denominator) == 0:
            raise DivisionByZeroError("Нулевой знаменатель в литерале")
        return self.coerce(Fraction(int(numerator), int(denominator)))

    def _accept_modulus(self, modulus: int) -> None:
        raise ModulusMismatchError(f"Поле {self.name} не допускает запись 'mod {modulus}'")

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "QQ"

    @property
    def spec(self) -> str:
        return "rationals"

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, PrimeFieldElement):
            raise ModulusMismatchError(f"Элемент {value} не принадлежит полю Q")
        raise FieldError(f"Невозможно привести {value!r} к рациональному числу")

    def format(self, element) -> str:
        return str(element)

    def to_sympy(self, element):
        return SYMPY_QQ(element.numerator, element.denominator)

    def sympy_domain(self):
        return SYMPY_QQ

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, modulus: int = DEFAULT_PRIME):
        if modulus < 2 or not isprime(modulus):
            raise FieldError(f"Модуль {modulus} не является простым числом")
        self.modulus = modulus
        self.name = f"GF({modulus})"

    @property
    def spec(self) -> str:
        return f"gf({self.modulus})"

    def coerce(self, value):
        if isinstance(value, PrimeFieldElement):
            if value.modulus != self.modulus:
                raise ModulusMismatchError(f"Элемент {value} не принадлежит полю {self.name}")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise DivisionByZeroError(f"Знаменатель {value.denominator} равен нулю в {self.name}")
            return PrimeFieldElement(value.numerator, self.modulus) / PrimeFieldElement(value.denominator, self.modulus)
        if isinstance(value, int) and not isinstance(value, bool):
            return PrimeFieldElement(value, self.modulus)
        raise FieldError(f"Невозможно привести {value!r} к элементу {self.name}")

    def format(self, element) -> str:
        return str(element.residue)

    def to_sympy(self, element):
        return self.sympy_domain()(element.residue)

    def sympy_domain(self):
        return GF(self.modulus)

    def _accept_modulus(self, modulus: int) -> None:
        if modulus != self.modulus:
            raise ModulusMismatchError(f"Запись 'mod {modulus}' не соответствует полю {self.name}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))


QQ = RationalField()

_GF_SPEC_RE = re.compile(r"^\s*gf\s*\(\s*(\d+)\s*\)\s*$", re.IGNORECASE)


def field_from_spec(spec: str) -> Field:
    """rationals | qq | gf(p) -> объект поля"""
    normalized = (spec or "").strip().lower()
    if normalized in ("rationals", "qq", "q"):
        return QQ
    match = _GF_SPEC_RE.match(normalized)
    if match:
        return PrimeField(int(match.group(1)))
    raise FieldError(f"Неизвестное поле: {spec!r} (ожидается rationals или gf(p))")
