"""
Многомерное деление с остатком.

Рабочий многочлен хранится словарём, старший моном выбирается из кучи
с ленивым удалением устаревших записей.
"""
import heapq
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from apps.algebra.ring import ExponentVector, MonomialOrder, Polynomial
from .budget import Budget, GBStats

# как часто проверять дедлайн внутри одной редукции
_TIME_CHECK_EVERY = 512


@dataclass(frozen=True)
class DivisionResult:
    quotients: List[Polynomial]
    remainder: Polynomial


def _divide(
    p: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder,
    with_quotients: bool,
    budget: Optional[Budget],
    stats: Optional[GBStats],
):
    ring = p.ring
    field = ring.field
    leads = []
    for g in divisors:
        coeff, monomial = g.leading_term(order)
        leads.append((monomial, field.inv(coeff)))

    work: Dict[ExponentVector, object] = dict(p.items())
    heap = [(order.heap_key(m), m) for m in work]
    heapq.heapify(heap)
    remainder: Dict[ExponentVector, object] = {}
    quotients: List[Dict[ExponentVector, object]] = [{} for _ in divisors] if with_quotients else []
    steps = 0

    while heap:
        _, monomial = heapq.heappop(heap)
        coeff = work.pop(monomial, None)
        if coeff is None:
            continue
        for position, (lead, lead_inverse) in enumerate(leads):
            if not lead.divides(monomial):
                continue
            factor = coeff * lead_inverse
            shift = monomial / lead
            if with_quotients:
                quotients[position][shift] = factor
            for g_monomial, g_coeff in divisors[position].items():
                if g_monomial == lead:
                    continue
                target = g_monomial * shift
                current = work.get(target)
                if current is None:
                    work[target] = -factor * g_coeff
                    heapq.heappush(heap, (order.heap_key(target), target))
                else:
                    updated = current - factor * g_coeff
                    if updated:
                        work[target] = updated
                    else:
                        del work[target]
            break
        else:
            remainder[monomial] = coeff

        steps += 1
        if budget is not None and stats is not None:
            stats.observe_length(len(work) + len(remainder))
            budget.check_terms(len(work) + len(remainder), stats)
            if steps % _TIME_CHECK_EVERY == 0:
                budget.check_time(stats)

    quotient_polys = [Polynomial(ring, q) for q in quotients]
    return quotient_polys, Polynomial(ring, remainder)


def reduce(
    p: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder,
    budget: Optional[Budget] = None,
    stats: Optional[GBStats] = None,
) -> DivisionResult:
    """
    Деление p на список divisors: p = sum(q_i * g_i) + r, ни один терм r
    не делится на старшие мономы g_i.

    Делитель выбирается первым по списку, поэтому результат зависит от
    порядка divisors (остаток однозначен только для базиса Грёбнера).
    """
    divisors = [g for g in divisors if g]
    quotients, remainder = _divide(p, divisors, order, True, budget, stats)
    return DivisionResult(quotients=quotients, remainder=remainder)


def normal_form(
    p: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder,
    budget: Optional[Budget] = None,
    stats: Optional[GBStats] = None,
) -> Polynomial:
    """Только остаток от деления, без частных"""
    return _divide(p, [g for g in divisors if g], order, False, budget, stats)[1]
