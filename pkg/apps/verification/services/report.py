"""
Структурированный отчёт о проверке одного утверждения.

Отчёт содержит только сериализуемые значения (строки, числа, словари),
поэтому его можно передавать между процессами и сохранять в JSON.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from apps.algebra.groebner import GBStats
from apps.algebra.ring import MonomialOrder, Polynomial


class Status(str, Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    PAPER_CITED = "paper-cited"
    BUDGET_EXCEEDED = "budget-exceeded"
    VERIFIED_NECESSARY = "verified-necessary"

    @property
    def label(self) -> str:
        if self is Status.VERIFIED_NECESSARY:
            return "verified (necessary conditions)"
        return self.value


class ClaimId(str, Enum):
    REGULAR_SEQUENCE = "regular-sequence"
    SATURATED = "saturated"
    GB_STRUCTURE = "gb-structure"
    QUOTIENT_STABILITY = "quotient-stability"
    DECOMPOSITION_SQUARE = "decomposition-square"
    DECOMPOSITION_RECT = "decomposition-rect"
    NONPRIME_WITNESS = "nonprime-witness"
    TORSIONFREE = "torsionfree"
    COFACTOR_IDENTITY = "cofactor-identity"
    SKEW_RELATION = "skew-relation"
    PRIMALITY = "primality"


# утверждения, в которых тип матрицы фиксирован и не входит в параметры
FIXED_KINDS: Dict[ClaimId, str] = {
    ClaimId.GB_STRUCTURE: "generic",
    ClaimId.QUOTIENT_STABILITY: "generic",
    ClaimId.DECOMPOSITION_RECT: "generic",
    ClaimId.SKEW_RELATION: "skew",
}


def _textual(value: Any) -> Any:
    if isinstance(value, Polynomial):
        return value.to_text()
    if isinstance(value, MonomialOrder):
        return value.to_text()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_textual(v) for v in value]
    if isinstance(value, dict):
        return {k: _textual(v) for k, v in value.items()}
    return value


@dataclass
class SubCheck:
    name: str
    passed: bool
    detail: str = ""
    # свидетельство ожидаемого опровержения: без него опровержение не засчитывается
    evidence: bool = False

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail, "evidence": self.evidence}


@dataclass
class Report:
    claim: ClaimId
    params: Dict[str, Any]
    status: Optional[Status] = None
    order: str = ""
    subchecks: List[SubCheck] = field(default_factory=list)
    witnesses: Dict[str, Any] = field(default_factory=dict)
    stats: Dict[str, int] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    elapsed_ms: int = 0
    expected: Optional[Status] = None
    stretch: bool = False

    def check(self, name: str, passed: bool, detail: str = "", evidence: bool = False) -> bool:
        self.subchecks.append(SubCheck(name=name, passed=bool(passed), detail=detail, evidence=evidence))
        return bool(passed)

    def witness(self, name: str, value: Any) -> None:
        self.witnesses[name] = _textual(value)

    def use_order(self, order: MonomialOrder) -> None:
        self.order = order.to_text()

    def add_stats(self, stats: GBStats) -> None:
        current = GBStats(**self.stats) if self.stats else GBStats()
        self.stats = current.merge(stats).to_dict()

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.subchecks)

    @property
    def evidence_passed(self) -> bool:
        return all(s.passed for s in self.subchecks if s.evidence)

    def finish(self, success: Status = Status.VERIFIED) -> "Report":
        """Итоговый статус: success, если все подпроверки пройдены, иначе refuted"""
        if self.status is None:
            self.status = success if self.passed else Status.REFUTED
        return self

    @property
    def unexpected(self) -> bool:
        if self.status is Status.BUDGET_EXCEEDED:
            return not self.stretch
        if self.expected is not None:
            if self.status is not self.expected:
                return True
            return self.status is Status.REFUTED and not self.evidence_passed
        return self.status is Status.REFUTED

    @property
    def matrix_kind(self) -> str:
        return self.params.get("kind") or FIXED_KINDS.get(self.claim, "")

    @property
    def label(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.claim.value}({params})"

    def to_dict(self, include_timing: bool = True) -> dict:
        data = {
            "claim": self.claim.value,
            "params": dict(self.params),
            "status": self.status.value if self.status else None,
            "expected": self.expected.value if self.expected else None,
            "stretch": self.stretch,
            "order": self.order,
            "subchecks": [s.to_dict() for s in self.subchecks],
            "witnesses": self.witnesses,
            "stats": dict(self.stats),
            "notes": list(self.notes),
        }
        if include_timing:
            data["elapsed_ms"] = self.elapsed_ms
        else:
            data["stats"].pop("elapsed_ms", None)
        return data
