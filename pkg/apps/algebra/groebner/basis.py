from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

from apps.algebra.ring import ExponentVector, MonomialOrder, Polynomial
from .budget import GBStats
from .division import normal_form


@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """
    Базис Грёбнера, помеченный порядком, которым он получен.

    Приведённый базис хранится отсортированным по убыванию старших мономов,
    поэтому равенство базисов одного идеала структурное.
    """

    order: MonomialOrder
    basis: Tuple[Polynomial, ...]
    reduced: bool = True
    stats: GBStats = field(default_factory=GBStats)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def leading_monomials(self) -> List[ExponentVector]:
        return [g.leading_monomial(self.order) for g in self.basis]

    def leading_terms(self) -> List[Polynomial]:
        return [g.ring.monomial(m) for m in self.leading_monomials()]

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.basis, self.order)

    def contains(self, p: Polynomial) -> bool:
        return not self.normal_form(p)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and set(self.basis) == set(other.basis)

    def __hash__(self):
        return hash((self.order, frozenset(self.basis)))

    def to_text(self) -> List[str]:
        return [g.to_text(self.order) for g in self.basis]


@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    failing_pair: Optional[Tuple[int, int]] = None
    remainder: Optional[Polynomial] = None

    def __bool__(self):
        return self.holds
