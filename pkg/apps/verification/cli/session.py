"""
Параметры сеанса командной строки: поле, матрица, порядок и бюджет.
Значения по умолчанию берутся из настроек проекта.
"""
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, List, Optional

from django.conf import settings

from apps.algebra.coeff import Field, field_from_spec
from apps.algebra.detlab import MatrixKind, SymbolicMatrix, build
from apps.algebra.groebner import Budget
from apps.algebra.ring import (
    Document,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    diagonal_order,
    parse_document,
    parse_order,
    parse_polynomial,
    superdiagonal_order,
    y_first_order,
)

ORDER_PRESETS = ("declaration", "grob", "regseq-generic", "regseq-skew")


@dataclass
class SessionConfig:
    field: Field
    kind: MatrixKind
    m: int
    n: int
    order_spec: str = "declaration"
    max_pairs: Optional[int] = None
    max_terms: Optional[int] = None
    timeout: Optional[float] = None
    output_format: str = "text"

    @classmethod
    def from_options(cls, options: Dict) -> "SessionConfig":
        n = options.get("n") or 2
        return cls(
            field=field_from_spec(options.get("field") or settings.ALGEBRA_DEFAULT_FIELD),
            kind=MatrixKind.parse(options.get("kind") or "generic"),
            m=options.get("m") or n,
            n=n,
            order_spec=options.get("order") or "declaration",
            max_pairs=options.get("max_pairs") or settings.ALGEBRA_MAX_PAIRS,
            max_terms=options.get("max_terms") or settings.ALGEBRA_MAX_TERMS,
            timeout=options.get("timeout"),
            output_format=options.get("format") or "text",
        )

    @cached_property
    def matrix(self) -> SymbolicMatrix:
        return build(self.kind, self.m, self.n, self.field)

    @property
    def ring(self) -> PolynomialRing:
        return self.matrix.ring

    @cached_property
    def macros(self) -> Dict[str, Polynomial]:
        return self.matrix.macros()

    @cached_property
    def order(self) -> MonomialOrder:
        """Именованный пресет или явная запись 'order lex: a > b > ...rest'"""
        spec = self.order_spec.strip()
        if spec == "declaration":
            return self.ring.default_order
        if spec == "grob":
            return y_first_order(self.ring)
        if spec == "regseq-generic":
            return diagonal_order(self.ring, self.m)
        if spec == "regseq-skew":
            return superdiagonal_order(self.ring, self.n)
        if not spec.startswith("order"):
            spec = f"order lex: {spec}"
        return parse_order(spec, self.ring)

    def budget(self) -> Budget:
        return Budget(max_pairs=self.max_pairs, max_terms=self.max_terms, timeout=self.timeout)

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.ring, self.macros)

    def parse_many(self, texts: Optional[List[str]]) -> List[Polynomial]:
        return [self.parse(text) for text in texts or ()]

    def read_document(self, path: str) -> Document:
        return parse_document(Path(path).read_text(encoding="utf-8"), self.ring, self.macros)

    def generators(self, with_det: bool = False, with_minors: bool = False) -> List[Polynomial]:
        result = self.matrix.xy_entries()
        if with_det:
            result.append(self.matrix.determinant())
        if with_minors:
            result += self.matrix.row_deleted_minors()
        return result
