"""
Реестр утверждений: claim -> функция проверки, и сетка экземпляров
по умолчанию для verify --all.
"""
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from . import checks
from .report import ClaimId, Report, Status

CHECKS: Dict[ClaimId, Callable[..., Report]] = {
    ClaimId.REGULAR_SEQUENCE: checks.check_regular_sequence,
    ClaimId.SATURATED: checks.check_saturated,
    ClaimId.GB_STRUCTURE: checks.check_gb_structure,
    ClaimId.QUOTIENT_STABILITY: checks.check_quotient_stability,
    ClaimId.DECOMPOSITION_SQUARE: checks.check_decomposition_square,
    ClaimId.DECOMPOSITION_RECT: checks.check_decomposition_rect,
    ClaimId.NONPRIME_WITNESS: checks.check_nonprime_witness,
    ClaimId.TORSIONFREE: checks.check_torsionfree_necessary,
    ClaimId.COFACTOR_IDENTITY: checks.check_cofactor_identity,
    ClaimId.SKEW_RELATION: checks.check_skew_relation,
    ClaimId.PRIMALITY: checks.check_primality,
}

# параметры, которые принимает каждая проверка (порядок - порядок вывода)
PARAMETERS: Dict[ClaimId, tuple] = {
    ClaimId.REGULAR_SEQUENCE: ("kind", "m", "n"),
    ClaimId.SATURATED: ("kind", "n", "t"),
    ClaimId.GB_STRUCTURE: ("n",),
    ClaimId.QUOTIENT_STABILITY: ("n", "i"),
    ClaimId.DECOMPOSITION_SQUARE: ("kind", "n"),
    ClaimId.DECOMPOSITION_RECT: ("n",),
    ClaimId.NONPRIME_WITNESS: ("kind", "n"),
    ClaimId.TORSIONFREE: ("kind", "n", "k", "m"),
    ClaimId.COFACTOR_IDENTITY: ("kind", "n"),
    ClaimId.SKEW_RELATION: ("n",),
    ClaimId.PRIMALITY: ("kind", "m", "n"),
}

OPTIONAL_PARAMETERS: Dict[ClaimId, frozenset] = {ClaimId.TORSIONFREE: frozenset({"m"})}

# проверка допустимости параметров без вычислений; те же функции вызывают сами проверки
VALIDATORS: Dict[ClaimId, Callable[..., Any]] = {
    ClaimId.REGULAR_SEQUENCE: checks.validate_regular_sequence,
    ClaimId.SATURATED: checks.validate_saturated,
    ClaimId.GB_STRUCTURE: checks.validate_gb_structure,
    ClaimId.QUOTIENT_STABILITY: checks.validate_quotient_stability,
    ClaimId.DECOMPOSITION_SQUARE: checks.validate_decomposition_square,
    ClaimId.DECOMPOSITION_RECT: checks.validate_decomposition_rect,
    ClaimId.NONPRIME_WITNESS: checks.validate_nonprime_witness,
    ClaimId.TORSIONFREE: checks.validate_torsionfree,
    ClaimId.COFACTOR_IDENTITY: checks.validate_cofactor_identity,
    ClaimId.SKEW_RELATION: checks.validate_skew_relation,
    ClaimId.PRIMALITY: checks.validate_primality,
}

SQUARE_KINDS = ("generic", "symmetric")


@dataclass(frozen=True)
class Instance:
    claim: ClaimId
    params: Dict[str, Any] = field(default_factory=dict)
    expected: Optional[Status] = None
    stretch: bool = False

    @property
    def label(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.claim.value}({params})"


def claim_from_text(value: str) -> ClaimId:
    try:
        return ClaimId(value)
    except ValueError:
        known = ", ".join(c.value for c in ClaimId)
        raise ValueError(f"Неизвестное утверждение {value!r}; допустимы: {known}") from None


def make_instance(claim: ClaimId, expected: Optional[Status] = None, stretch: bool = False, **params) -> Instance:
    """Экземпляр из произвольных параметров: лишние отбрасываются, None не передаётся"""
    accepted = PARAMETERS[claim]
    kept = {name: params[name] for name in accepted if params.get(name) is not None}
    missing = [name for name in accepted if name not in kept and name not in OPTIONAL_PARAMETERS.get(claim, ())]
    if missing:
        raise ValueError(f"Для {claim.value} не хватает параметров: {', '.join(missing)}")
    return Instance(claim=claim, params=kept, expected=expected, stretch=stretch)


def validate_instance(instance: Instance) -> Instance:
    """ShapeError, если параметры экземпляра недопустимы для его проверки"""
    VALIDATORS[instance.claim](**instance.params)
    return instance


def _regular_sequence() -> List[Instance]:
    result = [make_instance(ClaimId.REGULAR_SEQUENCE, kind=kind, m=n, n=n)
              for kind in SQUARE_KINDS for n in range(1, 5)]
    result += [make_instance(ClaimId.REGULAR_SEQUENCE, kind="generic", m=m, n=n) for m, n in ((2, 3), (3, 4))]
    result += [make_instance(ClaimId.REGULAR_SEQUENCE, kind="skew", m=n, n=n) for n in range(2, 6)]
    return result


def _saturated(max_n: int) -> List[Instance]:
    result = []
    for kind in SQUARE_KINDS:
        for n in range(1, max_n + 1):
            for t in range(1, n + 1):
                expected = Status.REFUTED if t == n else Status.VERIFIED
                result.append(make_instance(ClaimId.SATURATED, expected, n >= 3, kind=kind, n=n, t=t))
    for n in range(2, max_n + 2):
        for t in range(1, n):
            expected = Status.REFUTED if t == n - 1 else Status.VERIFIED
            result.append(make_instance(ClaimId.SATURATED, expected, n >= 4, kind="skew", n=n, t=t))
    return result


def default_grid(max_n: int = 2) -> List[Instance]:
    """
    Детерминированная сетка экземпляров. Дешёвые проверки (регулярность,
    тождества) идут на фиксированной сетке до n = 4-5, остальные - до max_n;
    экземпляры с n >= 3 в тяжёлых проверках помечены stretch.
    """
    grid = _regular_sequence()
    grid += _saturated(max_n)
    for n in range(1, max_n + 1):
        grid.append(make_instance(ClaimId.GB_STRUCTURE, stretch=n >= 3, n=n))
    for n in range(1, max_n + 1):
        grid += [make_instance(ClaimId.QUOTIENT_STABILITY, stretch=n >= 3, n=n, i=i) for i in range(1, n + 1)]
    grid += [make_instance(ClaimId.DECOMPOSITION_SQUARE, stretch=n >= 3, kind=kind, n=n)
             for kind in SQUARE_KINDS for n in range(1, max_n + 1)]
    grid += [make_instance(ClaimId.DECOMPOSITION_RECT, stretch=n >= 3, n=n) for n in range(1, max_n + 1)]
    grid += [make_instance(ClaimId.NONPRIME_WITNESS, kind=kind, n=n)
             for kind in SQUARE_KINDS for n in range(2, max_n + 2)]
    grid += [make_instance(ClaimId.NONPRIME_WITNESS, kind="skew", n=n) for n in range(3, max_n + 3)]
    for n in range(1, min(max_n, 2) + 1):
        grid += [make_instance(ClaimId.TORSIONFREE, Status.VERIFIED_NECESSARY, kind=kind, n=n, k=k)
                 for kind in SQUARE_KINDS for k in range(1, 4)]
    grid += [make_instance(ClaimId.TORSIONFREE, Status.VERIFIED_NECESSARY, kind="generic", m=2, n=1, k=k)
             for k in range(1, 3)]
    grid += [make_instance(ClaimId.COFACTOR_IDENTITY, kind=kind, n=n) for kind in SQUARE_KINDS for n in range(1, 5)]
    grid += [make_instance(ClaimId.SKEW_RELATION, n=n) for n in range(2, 6)]
    grid += [make_instance(ClaimId.PRIMALITY, Status.PAPER_CITED, kind=kind, m=n, n=n)
             for kind in SQUARE_KINDS for n in range(1, max_n + 1)]
    grid += [make_instance(ClaimId.PRIMALITY, Status.PAPER_CITED, kind="generic", m=n - 1, n=n)
             for n in range(2, max_n + 2)]
    return grid


def instances_for(claim: Optional[ClaimId] = None, max_n: int = 2, expected: Optional[Status] = None, **params) -> List[Instance]:
    """
    Без claim - вся сетка. С claim и явными параметрами - один экземпляр,
    с claim без параметров - его часть сетки.
    """
    if claim is None:
        return default_grid(max_n)
    accepted = PARAMETERS[claim]
    if not any(params.get(name) is not None for name in accepted):
        return [instance for instance in default_grid(max_n) if instance.claim is claim]

    if "kind" in accepted and params.get("kind") is None:
        params["kind"] = "generic"
    n = params.get("n")
    if n is not None and claim in (ClaimId.REGULAR_SEQUENCE, ClaimId.PRIMALITY) and params.get("m") is None:
        params["m"] = n
    if n is not None and claim is ClaimId.SATURATED and params.get("t") is None:
        params["t"] = max(n - (2 if params["kind"] == "skew" else 1), 1)
    return [make_instance(claim, expected, **params)]
