"""
Запуск экземпляров проверок: последовательно или в пуле процессов.
Отчёты возвращаются в порядке экземпляров независимо от порядка завершения.
"""
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from typing import Dict, Iterable, List

from .harness import CheckOptions
from .registry import CHECKS, Instance
from .report import Report, Status

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def run_instance(instance: Instance, options: CheckOptions = CheckOptions()) -> Report:
    check = CHECKS[instance.claim]
    report = check(options=options, **instance.params)
    report.expected = instance.expected
    report.stretch = instance.stretch
    logger.info(
        "%s: %s (%d мс)", instance.label, report.status.label, report.elapsed_ms
    )
    return report


def run_instances(instances: Iterable[Instance], options: CheckOptions = CheckOptions(), jobs: int = 1) -> List[Report]:
    instances = list(instances)
    if jobs <= 1 or len(instances) <= 1:
        return [run_instance(instance, options) for instance in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_instance, instances, repeat(options)))


@dataclass
class Summary:
    reports: List[Report]
    elapsed_ms: int = 0
    counts: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.counts:
            self.counts = dict(Counter(r.status.value for r in self.reports))

    @property
    def unexpected(self) -> List[Report]:
        return [r for r in self.reports if r.unexpected]

    @property
    def exit_code(self) -> int:
        if any(r.unexpected and r.status is not Status.BUDGET_EXCEEDED for r in self.reports):
            return EXIT_REFUTED
        if self.unexpected:
            return EXIT_BUDGET
        return EXIT_OK

    @property
    def passed(self) -> bool:
        return self.exit_code == EXIT_OK

    def line(self) -> str:
        parts = ", ".join(f"{status}: {count}" for status, count in sorted(self.counts.items()))
        return f"{len(self.reports)} проверок ({parts}); неожиданных: {len(self.unexpected)}"

    def to_dict(self, include_timing: bool = True) -> dict:
        data = {
            "total": len(self.reports),
            "counts": dict(sorted(self.counts.items())),
            "unexpected": [r.label for r in self.unexpected],
            "exit_code": self.exit_code,
        }
        if include_timing:
            data["elapsed_ms"] = self.elapsed_ms
        return data


def run(instances: Iterable[Instance], options: CheckOptions = CheckOptions(), jobs: int = 1) -> Summary:
    started = time.monotonic()
    reports = run_instances(instances, options, jobs)
    summary = Summary(reports=reports, elapsed_ms=int((time.monotonic() - started) * 1000))
    logger.info(summary.line())
    return summary
