from itertools import combinations
from typing import Optional, Sequence, Tuple

from apps.algebra.ring import MonomialOrder, Polynomial


def coprime_leading_terms(f: Polynomial, g: Polynomial, order: MonomialOrder) -> bool:
    """
    Старшие мономы f и g взаимно просты. Тогда S(f, g) редуцируется к нулю
    по {f, g}, и пару можно не рассматривать.
    """
    return f.leading_monomial(order).is_coprime(g.leading_monomial(order))


def pairwise_coprime(polys: Sequence[Polynomial], order: MonomialOrder) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Попарная взаимная простота старших мономов и первая нарушающая пара"""
    monomials = [p.leading_monomial(order) for p in polys]
    for i, j in combinations(range(len(monomials)), 2):
        if not monomials[i].is_coprime(monomials[j]):
            return False, (i, j)
    return True, None
