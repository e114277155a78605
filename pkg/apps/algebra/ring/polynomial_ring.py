from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from apps.algebra.coeff import QQ, Field
from apps.algebra.exceptions import FieldMismatchError, UnknownVariableError
from .monomials import ONE, ExponentVector
from .orders import MonomialOrder
from .polynomial import Polynomial
from .variables import Variable, VariableKind


class PolynomialRing:
    """
    Кольцо многочленов K[x, y] с фиксированным порядком объявления переменных.

    Индекс переменной равен её позиции в объявлении. Вспомогательные
    переменные исключения добавляются только в конец (extend), поэтому
    подъём многочлена в расширенное кольцо не меняет его мономов.
    """

    def __init__(self, field: Field, variables: Sequence[Variable]):
        self.field = field or QQ
        self.variables: Tuple[Variable, ...] = tuple(variables)
        self._index: Dict[Variable, int] = {}
        for position, variable in enumerate(self.variables):
            if variable in self._index:
                raise ValueError(f"Переменная {variable} объявлена дважды")
            self._index[variable] = position
        self._names = {str(v): v for v in self.variables}
        self._hash = hash((self.field, self.variables))

    # ------------------------------------------------------------------
    # Переменные
    # ------------------------------------------------------------------

    def __contains__(self, variable: Variable) -> bool:
        return variable in self._index

    def __len__(self):
        return len(self.variables)

    def index(self, variable: Variable) -> int:
        try:
            return self._index[variable]
        except KeyError:
            raise UnknownVariableError(f"Переменная {variable} не объявлена в кольце") from None

    def lookup(self, name: str) -> Optional[Variable]:
        return self._names.get(name)

    def x_variables(self) -> Tuple[Variable, ...]:
        return tuple(v for v in self.variables if v.kind is VariableKind.X)

    def y_variables(self) -> Tuple[Variable, ...]:
        return tuple(v for v in self.variables if v.kind is VariableKind.Y)

    def aux_variables(self) -> Tuple[Variable, ...]:
        return tuple(v for v in self.variables if v.kind is VariableKind.AUX)

    # ------------------------------------------------------------------
    # Конструкторы многочленов
    # ------------------------------------------------------------------

    @cached_property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @cached_property
    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, value) -> Polynomial:
        value = self.field.coerce(value)
        return Polynomial(self, {ONE: value} if value else {})

    def monomial(self, monomial: ExponentVector, coeff=1) -> Polynomial:
        coeff = self.field.coerce(coeff)
        return Polynomial(self, {monomial: coeff} if coeff else {})

    def var(self, variable: Variable) -> Polynomial:
        return self.monomial(ExponentVector.variable(self.index(variable)))

    def x(self, i: int, j: int) -> Polynomial:
        return self.var(Variable.x(i, j))

    def y(self, j: int) -> Polynomial:
        return self.var(Variable.y(j))

    def from_terms(self, terms: Iterable[Tuple[object, ExponentVector]]) -> Polynomial:
        collected: Dict[ExponentVector, object] = {}
        for coeff, monomial in terms:
            coeff = self.field.coerce(coeff)
            collected[monomial] = collected[monomial] + coeff if monomial in collected else coeff
        return Polynomial(self, {m: c for m, c in collected.items() if c})

    def from_dict(self, terms: Mapping[ExponentVector, object]) -> Polynomial:
        return self.from_terms((c, m) for m, c in terms.items())

    # ------------------------------------------------------------------
    # Порядки, расширения, разбор
    # ------------------------------------------------------------------

    @cached_property
    def default_order(self) -> MonomialOrder:
        return MonomialOrder(self, self.variables, name="declaration")

    def extend(self, *names: str) -> "PolynomialRing":
        extra = []
        for name in names:
            if name in self._names or name in ("x", "y"):
                raise ValueError(f"Имя вспомогательной переменной {name!r} уже занято")
            extra.append(Variable.aux(name))
        return PolynomialRing(self.field, self.variables + tuple(extra))

    def is_extension_of(self, other: "PolynomialRing") -> bool:
        return self.field == other.field and self.variables[: len(other.variables)] == other.variables

    def lift(self, p: Polynomial) -> Polynomial:
        if p.ring is self:
            return p
        if not self.is_extension_of(p.ring):
            raise FieldMismatchError(f"Кольцо {self!r} не расширяет {p.ring!r}")
        return Polynomial(self, p._terms)

    def restrict(self, p: Polynomial) -> Polynomial:
        if p.ring is self:
            return p
        if not p.ring.is_extension_of(self):
            raise FieldMismatchError(f"Кольцо {p.ring!r} не расширяет {self!r}")
        if p.max_index() >= len(self.variables):
            raise FieldMismatchError("Многочлен содержит вспомогательные переменные")
        return Polynomial(self, p._terms)

    def contains_polynomial(self, p: Polynomial) -> bool:
        """Лежит ли многочлен расширенного кольца в этом подкольце"""
        return p.max_index() < len(self.variables)

    def parse(self, text: str, macros: Optional[Mapping[str, Polynomial]] = None):
        from .parser import parse

        return parse(text, self, macros=macros)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and (
            self is other or (self.field == other.field and self.variables == other.variables)
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        names = ", ".join(str(v) for v in self.variables)
        return f"{self.field.name}[{names}]"
