"""
Операции над идеалами через исключение переменных.

Вспомогательная переменная добавляется в конец кольца и ставится в
блочном lex-порядке строго выше всех переменных кольца; пересечение
с подкольцом - это элементы приведённого базиса без вспомогательной
переменной. Они же образуют приведённый базис результата в базовом
порядке и сразу кладутся в его кеш.
"""
import logging
from itertools import combinations_with_replacement
from typing import Iterable, List, Optional, Sequence

from apps.algebra.exceptions import AlgebraError, ZeroPolynomialError
from apps.algebra.groebner import Budget, GroebnerBasis, GBStats, reduce
from apps.algebra.ring import (
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    Variable,
    elimination_order,
    y_first_order,
)
from .ideal import Ideal

logger = logging.getLogger(__name__)

MAX_SATURATION_ROUNDS = 64


def _fresh_name(ring: PolynomialRing, base: str) -> str:
    name, suffix = base, 0
    while ring.lookup(name) is not None:
        suffix += 1
        name = f"{base}{suffix}"
    return name


def eliminate(
    extended: PolynomialRing,
    generators: Sequence[Polynomial],
    base_ring: PolynomialRing,
    budget: Optional[Budget] = None,
    base_order: Optional[MonomialOrder] = None,
) -> Ideal:
    """<generators> в extended, пересечённый с base_ring"""
    base_order = base_order or y_first_order(base_ring)
    order = elimination_order(extended, base_order)
    basis = Ideal(extended, generators).groebner(order, budget)
    kept = tuple(base_ring.restrict(g) for g in basis if base_ring.contains_polynomial(g))
    result = Ideal(base_ring, kept)
    result.seed(GroebnerBasis(order=base_order, basis=kept, reduced=True, stats=basis.stats))
    logger.debug("Исключение %s: %d -> %d образующих", extended.aux_variables(), len(basis), len(kept))
    return result


def member(p: Polynomial, ideal: Ideal, budget: Optional[Budget] = None, order: Optional[MonomialOrder] = None) -> bool:
    return ideal.contains(p, order, budget)


def contains(ideal: Ideal, other: Ideal, budget: Optional[Budget] = None) -> bool:
    """other ⊆ ideal"""
    basis = ideal.groebner(budget=budget)
    return all(basis.contains(g) for g in other.generators)


def equal(first: Ideal, second: Ideal, budget: Optional[Budget] = None) -> bool:
    """Совпадение приведённых базисов в каноническом порядке (y1 > ... > yn > x построчно)"""
    if first.ring != second.ring:
        raise AlgebraError("Сравниваются идеалы разных колец")
    return first.groebner(budget=budget) == second.groebner(budget=budget)


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    return first + second


def ideal_product(first: Ideal, second: Ideal) -> Ideal:
    return Ideal(first.ring, [f * g for f in first.nonzero_generators for g in second.nonzero_generators])


def ideal_power(ideal: Ideal, k: int) -> Ideal:
    """Все k-кратные произведения образующих, без прореживания"""
    if k < 0:
        raise ValueError("Отрицательная степень идеала")
    if k == 0:
        return Ideal(ideal.ring, [ideal.ring.one])
    products = []
    for combo in combinations_with_replacement(ideal.nonzero_generators, k):
        product = ideal.ring.one
        for g in combo:
            product = product * g
        products.append(product)
    return Ideal(ideal.ring, products)


def intersect(first: Ideal, second: Ideal, budget: Optional[Budget] = None) -> Ideal:
    """I ∩ J = (t*I + (1 - t)*J) ∩ K[x, y]"""
    ring = first.ring
    extended = ring.extend(_fresh_name(ring, "t"))
    t = extended.var(extended.aux_variables()[-1])
    generators = [t * extended.lift(f) for f in first.nonzero_generators]
    generators += [(1 - t) * extended.lift(g) for g in second.nonzero_generators]
    return eliminate(extended, generators, ring, budget)


def exact_quotient(p: Polynomial, f: Polynomial, order: MonomialOrder) -> Polynomial:
    result = reduce(p, [f], order)
    if result.remainder:
        raise AlgebraError(f"{f} не делит {p}")
    return result.quotients[0]


def quotient(ideal: Ideal, f: Polynomial, budget: Optional[Budget] = None) -> Ideal:
    """I : f = (I ∩ <f>) / f"""
    if not f:
        raise ZeroPolynomialError("Частное идеала по нулевому многочлену не определено")
    ring = ideal.ring
    if f.is_constant:
        return Ideal(ring, ideal.generators)
    common = intersect(ideal, Ideal(ring, [f]), budget)
    order = ideal.canonical_order
    return Ideal(ring, [exact_quotient(h, f, order) for h in common.groebner(order)])


def saturate(ideal: Ideal, f: Polynomial, budget: Optional[Budget] = None) -> Ideal:
    """I : f^∞ = (I + <z*f - 1>) ∩ K[x, y]"""
    if not f:
        raise ZeroPolynomialError("Насыщение по нулевому многочлену не определено")
    ring = ideal.ring
    if f.is_constant:
        return Ideal(ring, ideal.generators)
    extended = ring.extend(_fresh_name(ring, "z"))
    z = extended.var(extended.aux_variables()[-1])
    generators = [extended.lift(g) for g in ideal.nonzero_generators]
    generators.append(z * extended.lift(f) - 1)
    return eliminate(extended, generators, ring, budget)


def saturate_iterated(
    ideal: Ideal, f: Polynomial, budget: Optional[Budget] = None, max_rounds: int = MAX_SATURATION_ROUNDS
) -> Ideal:
    """Насыщение повторными частными I : f, I : f^2, ... до стабилизации"""
    current = ideal
    for _ in range(max_rounds):
        following = quotient(current, f, budget)
        if equal(following, current, budget):
            return current
        current = following
    raise AlgebraError(f"Частные не стабилизировались за {max_rounds} шагов")


def tower_coefficients(generators: Sequence[Polynomial], tower: Sequence[Variable]) -> List[Polynomial]:
    """Старшие коэффициенты g_i по переменным башни (x[1][n], x[2][n], ...)"""
    return [g.univariate_lead(v)[1] for g, v in zip(generators, tower)]


def bracket(
    generators: Sequence[Polynomial], lead_coeffs: Iterable[Polynomial], budget: Optional[Budget] = None
) -> Ideal:
    """
    Скобочный идеал [f_1, ..., f_t]: насыщение <f_1, ..., f_t> по произведению
    различных старших коэффициентов a_i. Если все a_i совпадают (y_n в
    рассматриваемых башнях), это насыщение по одному a.
    """
    if not generators:
        raise AlgebraError("Скобочный идеал пустого набора не определён")
    ring = generators[0].ring
    distinct: List[Polynomial] = []
    for a in lead_coeffs:
        if not a:
            raise ZeroPolynomialError("Нулевой старший коэффициент в башне")
        if a not in distinct:
            distinct.append(a)
    product = ring.one
    for a in distinct:
        product = product * a
    base = Ideal(ring, generators)
    if product.is_constant:
        return base
    return saturate(base, product, budget)


def squarefree_lt_radical_witness(ideal: Ideal, order: Optional[MonomialOrder] = None, budget: Optional[Budget] = None) -> bool:
    """
    Все старшие мономы приведённого базиса свободны от квадратов.
    Тогда идеал старших термов радикален, а значит, радикален и сам идеал.
    """
    return all(m.is_squarefree() for m in ideal.groebner(order, budget).leading_monomials())


def basis_stats(*ideals: Ideal) -> GBStats:
    """Суммарная статистика по всем закешированным базисам"""
    total = GBStats()
    for ideal in ideals:
        for order in ideal.cached_orders():
            total = total.merge(ideal.groebner(order).stats)
    return total
