"""
Лексикографические мономиальные порядки с явным списком приоритетов
и построители порядков, которые используются в проверках.

Неполные цепочки дополняются детерминированно: оставшиеся x-переменные
построчно, затем y1 > ... > yn, затем вспомогательные переменные.
"""
from enum import IntEnum
from functools import lru_cache
from typing import TYPE_CHECKING, Callable, Iterable, Optional, Sequence, Tuple

from apps.algebra.exceptions import OrderError
from .monomials import ExponentVector
from .variables import Variable

if TYPE_CHECKING:
    from .polynomial_ring import PolynomialRing


# число ключей, которое помнит один порядок
KEY_CACHE_SIZE = 1 << 16


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class MonomialOrder:
    """
    Лексикографический порядок по списку приоритетов.

    Ключ монома - плотный кортеж показателей в порядке приоритета;
    сравнение ключей как кортежей совпадает с lex-сравнением мономов.
    """

    style = "lex"

    def __init__(self, ring: "PolynomialRing", priority: Sequence[Variable], name: Optional[str] = None):
        priority = tuple(priority)
        seen = set()
        for variable in priority:
            if variable in seen:
                raise OrderError(f"Переменная {variable} указана в порядке дважды")
            if variable not in ring:
                raise OrderError(f"Переменная {variable} не объявлена в кольце")
            seen.add(variable)
        missing = [str(v) for v in ring.variables if v not in seen]
        if missing:
            raise OrderError(f"Порядок не содержит переменные: {', '.join(missing)}")

        self.ring = ring
        self.priority: Tuple[Variable, ...] = priority
        self.name = name
        self._position = [0] * len(priority)
        for position, variable in enumerate(priority):
            self._position[ring.index(variable)] = position
        # кэши ключей ограничены и живут вместе с порядком
        self.key: Callable[[ExponentVector], Tuple[int, ...]] = lru_cache(maxsize=KEY_CACHE_SIZE)(self._dense_key)
        self.heap_key: Callable[[ExponentVector], Tuple[int, ...]] = lru_cache(maxsize=KEY_CACHE_SIZE)(
            self._negated_key
        )

    def _dense_key(self, monomial: ExponentVector) -> Tuple[int, ...]:
        dense = [0] * len(self._position)
        for index, exponent in monomial:
            if index >= len(self._position):
                raise OrderError(f"Моном содержит переменную с индексом {index} вне порядка")
            dense[self._position[index]] = exponent
        return tuple(dense)

    def _negated_key(self, monomial: ExponentVector) -> Tuple[int, ...]:
        """Ключ для min-кучи: наименьший ключ у старшего монома"""
        return tuple(-e for e in self.key(monomial))

    def compare(self, u: ExponentVector, v: ExponentVector) -> Ordering:
        ku, kv = self.key(u), self.key(v)
        if ku == kv:
            return Ordering.EQ
        return Ordering.GT if ku > kv else Ordering.LT

    def max(self, monomials: Iterable[ExponentVector]) -> ExponentVector:
        return max(monomials, key=self.key)

    def sorted(self, monomials: Iterable[ExponentVector], descending: bool = True):
        return sorted(monomials, key=self.key, reverse=descending)

    def to_text(self) -> str:
        return "order lex: " + " > ".join(str(v) for v in self.priority)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.ring == other.ring and self.priority == other.priority

    def __hash__(self):
        return hash((self.ring, self.priority))

    def __repr__(self):
        label = f" [{self.name}]" if self.name else ""
        return f"<MonomialOrder{label} {self.to_text()}>"


def compare(order: MonomialOrder, u: ExponentVector, v: ExponentVector) -> Ordering:
    return order.compare(u, v)


def complete_order(ring: "PolynomialRing", chain: Sequence[Variable], name: Optional[str] = None) -> MonomialOrder:
    """Цепочка сверху, ниже - остальные x построчно, затем y, затем вспомогательные"""
    chain = tuple(chain)
    head = set(chain)
    tail = [v for v in ring.x_variables() if v not in head]
    tail += [v for v in ring.y_variables() if v not in head]
    tail += [v for v in ring.aux_variables() if v not in head]
    return MonomialOrder(ring, chain + tuple(tail), name=name)


def diagonal_order(ring: "PolynomialRing", m: int) -> MonomialOrder:
    """x11 > x22 > ... > xmm > остальные (общий и симметрический случаи)"""
    chain = [Variable.x(i, i) for i in range(1, m + 1)]
    return complete_order(ring, chain, name="regseq-generic")


def superdiagonal_order(ring: "PolynomialRing", n: int) -> MonomialOrder:
    """x(n-1,n) > ... > x(2,3) > x(1,2) > остальные (кососимметрический случай)"""
    chain = [Variable.x(i, i + 1) for i in range(n - 1, 0, -1)]
    return complete_order(ring, chain, name="regseq-skew")


def y_first_order(ring: "PolynomialRing") -> MonomialOrder:
    """y1 > ... > yn > x11 > x12 > ... (построчно)"""
    priority = list(ring.y_variables()) + list(ring.x_variables()) + list(ring.aux_variables())
    return MonomialOrder(ring, priority, name="grob")


def moved_y_order(ring: "PolynomialRing", i: int) -> MonomialOrder:
    """Как y_first_order, но yi перенесена в конец y-блока"""
    moved = Variable.y(i)
    if moved not in ring:
        raise OrderError(f"Переменная {moved} не объявлена в кольце")
    ys = [v for v in ring.y_variables() if v != moved] + [moved]
    priority = ys + list(ring.x_variables()) + list(ring.aux_variables())
    return MonomialOrder(ring, priority, name=f"grob-y{i}-last")


def elimination_order(ring: "PolynomialRing", base: MonomialOrder) -> MonomialOrder:
    """Блочный lex: вспомогательные переменные строго выше переменных базового порядка"""
    aux = [v for v in ring.aux_variables() if v not in set(base.priority)]
    if not aux:
        raise OrderError("Кольцо не содержит вспомогательных переменных для исключения")
    return MonomialOrder(ring, aux + list(base.priority), name=f"elim({base.name or 'custom'})")
