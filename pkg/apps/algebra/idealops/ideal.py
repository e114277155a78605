import threading
from collections import defaultdict
from typing import Dict, Iterable, Optional, Tuple

from apps.algebra.groebner import Budget, GroebnerBasis, buchberger
from apps.algebra.ring import MonomialOrder, Polynomial, PolynomialRing, y_first_order


class Ideal:
    """
    Идеал, заданный списком образующих, с кешем базисов Грёбнера по порядкам.

    Образующие неизменяемы; единственное изменяемое состояние - кеш, который
    заполняется не более одного раза на порядок (вычисление под блокировкой
    ключа, чтение без блокировки).
    """

    def __init__(self, ring: PolynomialRing, generators: Iterable[Polynomial] = ()):
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(ring.lift(g) if g.ring != ring else g for g in generators)
        self._cache: Dict[MonomialOrder, GroebnerBasis] = {}
        self._locks: Dict[MonomialOrder, threading.Lock] = defaultdict(threading.Lock)
        self._locks_guard = threading.Lock()

    @property
    def canonical_order(self) -> MonomialOrder:
        return y_first_order(self.ring)

    @property
    def nonzero_generators(self) -> Tuple[Polynomial, ...]:
        return tuple(g for g in self.generators if g)

    def groebner(self, order: Optional[MonomialOrder] = None, budget: Optional[Budget] = None) -> GroebnerBasis:
        order = order or self.canonical_order
        cached = self._cache.get(order)
        if cached is not None:
            return cached
        with self._locks_guard:
            lock = self._locks[order]
        with lock:
            cached = self._cache.get(order)
            if cached is None:
                cached = self._cache[order] = buchberger(self.generators, order, budget)
            return cached

    def seed(self, basis: GroebnerBasis) -> None:
        """Подложить заранее известный приведённый базис (например, после исключения)"""
        self._cache.setdefault(basis.order, basis)

    def cached_orders(self) -> Tuple[MonomialOrder, ...]:
        return tuple(self._cache)

    def contains(self, p: Polynomial, order: Optional[MonomialOrder] = None, budget: Optional[Budget] = None) -> bool:
        return self.groebner(order, budget).contains(p)

    def __contains__(self, p: Polynomial) -> bool:
        return self.contains(p)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.generators + other.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def to_text(self) -> str:
        return "<" + ", ".join(g.to_text() for g in self.generators) + ">"

    def __repr__(self):
        return f"Ideal({self.to_text()})"
