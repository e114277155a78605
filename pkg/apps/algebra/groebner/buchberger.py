"""
Алгоритм Бухбергера: нормальная стратегия выбора пар (наименьший lcm),
критерий взаимно простых старших термов и цепной критерий Гебауэра-Мёллера.
Результат всегда приведённый и унитарный.
"""
import heapq
import logging
import time
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from apps.algebra.ring import ExponentVector, MonomialOrder, Polynomial
from .basis import CriterionResult, GroebnerBasis
from .budget import Budget, GBStats
from .division import normal_form
from .spoly import s_polynomial

logger = logging.getLogger(__name__)


class _PairQueue:
    """Куча критических пар с ленивым удалением"""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.heap: List[Tuple[Tuple[int, ...], int, int]] = []
        self.live: Set[Tuple[int, int]] = set()
        self.lcms: Dict[Tuple[int, int], ExponentVector] = {}

    def push(self, i: int, j: int, lcm: ExponentVector) -> None:
        pair = (min(i, j), max(i, j))
        self.live.add(pair)
        self.lcms[pair] = lcm
        heapq.heappush(self.heap, (self.order.key(lcm), pair[0], pair[1]))

    def discard(self, pair: Tuple[int, int]) -> None:
        self.live.discard(pair)

    def pop(self) -> Optional[Tuple[int, int]]:
        while self.heap:
            _, i, j = heapq.heappop(self.heap)
            if (i, j) in self.live:
                self.live.remove((i, j))
                return i, j
        return None


class _Buchberger:
    def __init__(self, order: MonomialOrder, budget: Budget, stats: GBStats):
        self.order = order
        self.budget = budget
        self.stats = stats
        self.polys: List[Polynomial] = []
        self.leads: List[ExponentVector] = []
        self.active: Set[int] = set()
        self.pairs = _PairQueue(order)

    def add(self, p: Polynomial) -> int:
        p = p.monic(self.order)
        self.polys.append(p)
        self.leads.append(p.leading_monomial(self.order))
        return len(self.polys) - 1

    def update(self, h: int) -> None:
        lead_h = self.leads[h]
        leads = self.leads

        # новые пары (h, g)
        candidates = sorted(self.active)
        kept: List[int] = []
        while candidates:
            g = candidates.pop()
            lcm_hg = lead_h.lcm(leads[g])
            if lead_h.is_coprime(leads[g]):
                kept.append(g)
                continue
            dominated = any(lead_h.lcm(leads[o]).divides(lcm_hg) for o in candidates) or any(
                lead_h.lcm(leads[o]).divides(lcm_hg) for o in kept
            )
            if dominated:
                self.stats.pairs_skipped_chain += 1
            else:
                kept.append(g)
        for g in kept:
            if lead_h.is_coprime(leads[g]):
                self.stats.pairs_skipped_coprime += 1
            else:
                self.pairs.push(h, g, lead_h.lcm(leads[g]))

        # старые пары, которые h делает лишними
        for pair in list(self.pairs.live):
            if pair[0] == h or pair[1] == h:
                continue
            lcm12 = self.pairs.lcms[pair]
            if (
                lead_h.divides(lcm12)
                and leads[pair[0]].lcm(lead_h) != lcm12
                and leads[pair[1]].lcm(lead_h) != lcm12
            ):
                self.pairs.discard(pair)
                self.stats.pairs_skipped_chain += 1

        self.active = {g for g in self.active if not lead_h.divides(leads[g])}
        self.active.add(h)

    def run(self, gens: Sequence[Polynomial]) -> List[Polynomial]:
        start = [g for g in gens if g]
        start.sort(key=lambda g: self.order.key(g.leading_monomial(self.order)))
        for g in start:
            r = normal_form(g, [self.polys[i] for i in self.active], self.order, self.budget, self.stats)
            if r:
                self.update(self.add(r))

        while True:
            pair = self.pairs.pop()
            if pair is None:
                break
            self.budget.charge_pair(self.stats)
            self.stats.pairs_processed += 1
            i, j = pair
            s = s_polynomial(self.polys[i], self.polys[j], self.order)
            divisors = [self.polys[k] for k in sorted(self.active)]
            r = normal_form(s, divisors, self.order, self.budget, self.stats)
            if not r:
                self.stats.zero_reductions += 1
                continue
            self.stats.reductions += 1
            self.stats.observe_length(len(r))
            self.update(self.add(r))

        return self.interreduce([self.polys[i] for i in self.active])

    def interreduce(self, basis: List[Polynomial]) -> List[Polynomial]:
        # старшие мономы активного множества попарно не делят друг друга
        reduced = []
        for position, g in enumerate(basis):
            others = basis[:position] + basis[position + 1:]
            coeff, lead = g.leading_term(self.order)
            tail = g - g.ring.monomial(lead, coeff)
            tail = normal_form(tail, others, self.order, self.budget, self.stats)
            reduced.append((g.ring.monomial(lead, coeff) + tail).monic(self.order))
        reduced.sort(key=lambda g: self.order.key(g.leading_monomial(self.order)), reverse=True)
        return reduced


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder, budget: Optional[Budget] = None) -> GroebnerBasis:
    """
    Приведённый базис Грёбнера идеала <gens> для порядка order.

    При исчерпании бюджета поднимает BudgetExceededError с частичной
    статистикой. Нулевые образующие отбрасываются; базис нулевого идеала пуст.
    """
    budget = (budget or Budget()).start()
    stats = GBStats()
    started = time.monotonic()
    engine = _Buchberger(order, budget, stats)
    try:
        basis = engine.run(gens)
    finally:
        stats.elapsed_ms = int((time.monotonic() - started) * 1000)
    stats.basis_size = len(basis)
    logger.debug(
        "Базис Грёбнера: %d образующих -> %d элементов, пар %d, редукций %d, %d мс",
        len(gens), len(basis), stats.pairs_processed, stats.reductions, stats.elapsed_ms,
    )
    return GroebnerBasis(order=order, basis=tuple(basis), reduced=True, stats=stats)


def is_groebner(polys: Sequence[Polynomial], order: MonomialOrder) -> CriterionResult:
    """Критерий Бухбергера: все S-многочлены редуцируются к нулю по polys"""
    basis = [p for p in polys if p]
    for i, j in combinations(range(len(basis)), 2):
        if basis[i].leading_monomial(order).is_coprime(basis[j].leading_monomial(order)):
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder:
            return CriterionResult(holds=False, failing_pair=(i, j), remainder=remainder)
    return CriterionResult(holds=True)
