"""
Разреженные многочлены над точным полем.

Многочлен неизменяем: словарь моном -> ненулевой коэффициент, без нулевых
коэффициентов; нулевой многочлен - пустой словарь. Все операции возвращают
новые значения, поэтому многочлены можно свободно разделять между задачами.
"""
from typing import TYPE_CHECKING, Dict, Iterable, List, Mapping, Set, Tuple

from apps.algebra.exceptions import AlgebraError, FieldMismatchError, ZeroPolynomialError
from .monomials import ONE, ExponentVector
from .variables import Variable

if TYPE_CHECKING:
    from .orders import MonomialOrder
    from .polynomial_ring import PolynomialRing

Term = Tuple[object, ExponentVector]


class Polynomial:
    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: "PolynomialRing", terms: Mapping[ExponentVector, object]):
        # terms уже нормализованы: без нулевых коэффициентов
        self.ring = ring
        self._terms: Dict[ExponentVector, object] = dict(terms)
        self._hash = None

    # ------------------------------------------------------------------
    # Доступ к термам
    # ------------------------------------------------------------------

    def items(self):
        return self._terms.items()

    def monomials(self) -> List[ExponentVector]:
        return list(self._terms)

    def coefficient(self, monomial: ExponentVector):
        return self._terms.get(monomial, self.ring.field.zero)

    def terms(self, order: "MonomialOrder" = None) -> List[Term]:
        order = order or self.ring.default_order
        return [(self._terms[m], m) for m in order.sorted(self._terms)]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE in self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("Степень нулевого многочлена не определена")
        return max(m.degree for m in self._terms)

    def support(self) -> Set[int]:
        return {i for m in self._terms for i in m.support}

    def variables(self) -> List[Variable]:
        return [self.ring.variables[i] for i in sorted(self.support())]

    def max_index(self) -> int:
        return max((m.max_index() for m in self._terms), default=-1)

    # ------------------------------------------------------------------
    # Арифметика
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise FieldMismatchError(f"Многочлены из разных колец: {self.ring!r} и {other.ring!r}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        if len(other._terms) > len(self._terms):
            big, small = other, self
        else:
            big, small = self, other
        terms = dict(big._terms)
        for monomial, coeff in small._terms.items():
            total = terms.get(monomial)
            total = coeff if total is None else total + coeff
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: Dict[ExponentVector, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                monomial = m1 * m2
                total = terms.get(monomial)
                terms[monomial] = c1 * c2 if total is None else total + c1 * c2
        return Polynomial(self.ring, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Отрицательная степень многочлена")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, coeff, monomial: ExponentVector) -> "Polynomial":
        if not coeff:
            return self.ring.zero
        return Polynomial(self.ring, {m * monomial: c * coeff for m, c in self._terms.items()})

    def scale(self, coeff) -> "Polynomial":
        coeff = self.ring.field.coerce(coeff)
        if not coeff:
            return self.ring.zero
        return Polynomial(self.ring, {m: c * coeff for m, c in self._terms.items()})

    # ------------------------------------------------------------------
    # Старшие термы
    # ------------------------------------------------------------------

    def leading_term(self, order: "MonomialOrder") -> Term:
        if not self._terms:
            raise ZeroPolynomialError("Старший терм нулевого многочлена не определён")
        monomial = max(self._terms, key=order.key)
        return self._terms[monomial], monomial

    def leading_monomial(self, order: "MonomialOrder") -> ExponentVector:
        return self.leading_term(order)[1]

    def leading_coefficient(self, order: "MonomialOrder"):
        return self.leading_term(order)[0]

    def monic(self, order: "MonomialOrder") -> "Polynomial":
        coeff = self.leading_coefficient(order)
        return self.scale(self.ring.field.inv(coeff))

    def univariate_lead(self, variable: Variable) -> Tuple[int, "Polynomial"]:
        """Степень по переменной и коэффициент при её старшей степени"""
        if not self._terms:
            raise ZeroPolynomialError("Старший коэффициент нулевого многочлена не определён")
        index = self.ring.index(variable)
        degree = max(m.exponent(index) for m in self._terms)
        power = ExponentVector.variable(index, degree)
        lead = {m / power: c for m, c in self._terms.items() if m.exponent(index) == degree}
        return degree, Polynomial(self.ring, lead)

    # ------------------------------------------------------------------
    # Сравнение и печать
    # ------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.ring is other.ring or self.ring == other.ring) and self._terms == other._terms
        try:
            return self._terms == self.ring.constant(other)._terms
        except AlgebraError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def format_monomial(self, monomial: ExponentVector) -> str:
        parts = []
        for index, exponent in monomial:
            name = str(self.ring.variables[index])
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(parts)

    def to_text(self, order: "MonomialOrder" = None) -> str:
        if not self._terms:
            return "0"
        field = self.ring.field
        chunks = []
        for coeff, monomial in self.terms(order):
            negative = _is_negative(coeff)
            magnitude = -coeff if negative else coeff
            if monomial == ONE:
                body = field.format(magnitude)
            elif magnitude == field.one:
                body = self.format_monomial(monomial)
            else:
                body = f"{field.format(magnitude)}*{self.format_monomial(monomial)}"
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f" - {body}" if negative else f" + {body}")
        return "".join(chunks)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def _is_negative(coeff) -> bool:
    try:
        return coeff < 0
    except TypeError:
        return False


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def leading_term(order: "MonomialOrder", p: Polynomial) -> Term:
    return p.leading_term(order)


def univariate_lead(p: Polynomial, variable: Variable) -> Tuple[int, Polynomial]:
    return p.univariate_lead(variable)


def poly_sum(polys: Iterable[Polynomial], ring: "PolynomialRing") -> Polynomial:
    total = ring.zero
    for p in polys:
        total = total + p
    return total
