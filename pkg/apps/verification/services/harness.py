import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator, Optional

from apps.algebra.coeff import Field, field_from_spec
from apps.algebra.detlab import SymbolicMatrix, build
from apps.algebra.exceptions import BudgetExceededError
from apps.algebra.groebner import DEFAULT_MAX_PAIRS, Budget
from apps.algebra.idealops import Ideal, basis_stats
from .report import Report, Status

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckOptions:
    """Параметры одного прогона проверки: поле и ресурсный бюджет"""

    field_spec: str = "rationals"
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_terms: Optional[int] = None
    timeout: Optional[float] = 120.0

    @property
    def field(self) -> Field:
        return field_from_spec(self.field_spec)

    def budget(self) -> Budget:
        return Budget(max_pairs=self.max_pairs, max_terms=self.max_terms, timeout=self.timeout)

    def matrix(self, kind, m: int, n: int) -> SymbolicMatrix:
        return build(kind, m, n, self.field)


@contextmanager
def guarded(report: Report, options: CheckOptions) -> Iterator[Budget]:
    """
    Выполнить тело проверки под общим бюджетом. Исчерпание бюджета
    превращается в статус budget-exceeded с частичной статистикой.
    """
    budget = options.budget().start()
    started = time.monotonic()
    try:
        yield budget
    except BudgetExceededError as exc:
        report.status = Status.BUDGET_EXCEEDED
        report.notes.append(str(exc))
        if exc.stats is not None:
            report.add_stats(exc.stats)
        logger.warning("%s: бюджет исчерпан (%s)", report.label, exc)
    finally:
        report.elapsed_ms = int((time.monotonic() - started) * 1000)


def collect_stats(report: Report, *ideals: Ideal) -> None:
    report.add_stats(basis_stats(*ideals))
