"""
Ресурсный бюджет и статистика алгоритма Бухбергера.

Бюджет накопительный: один объект Budget можно передать в несколько
вычислений подряд (например, все базисы одной проверки), счётчик пар
и дедлайн общие.
"""
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from apps.algebra.exceptions import BudgetExceededError

DEFAULT_MAX_PAIRS = 10 ** 6


@dataclass
class GBStats:
    pairs_processed: int = 0
    pairs_skipped_coprime: int = 0
    pairs_skipped_chain: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    max_poly_length: int = 0
    basis_size: int = 0
    elapsed_ms: int = 0

    def observe_length(self, length: int) -> None:
        if length > self.max_poly_length:
            self.max_poly_length = length

    def merge(self, other: "GBStats") -> "GBStats":
        return GBStats(
            pairs_processed=self.pairs_processed + other.pairs_processed,
            pairs_skipped_coprime=self.pairs_skipped_coprime + other.pairs_skipped_coprime,
            pairs_skipped_chain=self.pairs_skipped_chain + other.pairs_skipped_chain,
            reductions=self.reductions + other.reductions,
            zero_reductions=self.zero_reductions + other.zero_reductions,
            max_poly_length=max(self.max_poly_length, other.max_poly_length),
            basis_size=max(self.basis_size, other.basis_size),
            elapsed_ms=self.elapsed_ms + other.elapsed_ms,
        )

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class Budget:
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_terms: Optional[int] = None
    timeout: Optional[float] = None
    pairs_used: int = field(default=0, init=False)
    _deadline: Optional[float] = field(default=None, init=False, repr=False)

    def start(self) -> "Budget":
        if self.timeout is not None and self._deadline is None:
            self._deadline = time.monotonic() + self.timeout
        return self

    def charge_pair(self, stats: GBStats) -> None:
        self.pairs_used += 1
        if self.pairs_used > self.max_pairs:
            raise BudgetExceededError(f"Превышен лимит пар: {self.max_pairs}", stats=stats)
        self.check_time(stats)

    def check_terms(self, length: int, stats: GBStats) -> None:
        if self.max_terms is not None and length > self.max_terms:
            raise BudgetExceededError(
                f"Промежуточный многочлен из {length} термов превышает лимит {self.max_terms}", stats=stats
            )

    def check_time(self, stats: GBStats) -> None:
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceededError(f"Превышен лимит времени: {self.timeout} с", stats=stats)
