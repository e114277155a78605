"""
Независимый оракул принадлежности: ранг матрицы Маколея.

p лежит в усечении идеала степени d, если p линейно выражается через
произведения m * g_i с deg(m * g_i) <= d. Для однородных образующих и
однородного p при d = deg(p) это совпадает с принадлежностью идеалу.
"""
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from apps.algebra.ring import ExponentVector, Polynomial, PolynomialRing


def monomials_up_to(ring: PolynomialRing, degree: int) -> List[ExponentVector]:
    result = []
    for d in range(degree + 1):
        for indices in combinations_with_replacement(range(len(ring)), d):
            result.append(ExponentVector.from_pairs((i, 1) for i in indices))
    return result


def macaulay_rows(generators: Sequence[Polynomial], degree: int) -> List[Polynomial]:
    rows = []
    for g in generators:
        if not g or g.degree > degree:
            continue
        for shift in monomials_up_to(g.ring, degree - g.degree):
            rows.append(g.mul_term(g.ring.field.one, shift))
    return rows


def macaulay_member(p: Polynomial, generators: Sequence[Polynomial], degree: Optional[int] = None) -> bool:
    """Принадлежность p усечению <generators> степени degree (по умолчанию deg p)"""
    if not p:
        return True
    degree = p.degree if degree is None else max(degree, p.degree)
    rows = macaulay_rows(generators, degree)
    if not rows:
        return False

    field = p.ring.field
    domain = field.sympy_domain()
    columns: Dict[ExponentVector, int] = {}
    for poly in rows + [p]:
        for monomial, _ in poly.items():
            columns.setdefault(monomial, len(columns))

    def dense(poly: Polynomial):
        row = [domain.zero] * len(columns)
        for monomial, coeff in poly.items():
            row[columns[monomial]] = field.to_sympy(coeff)
        return row

    matrix = [dense(r) for r in rows]
    base = DomainMatrix(matrix, (len(matrix), len(columns)), domain)
    extended = DomainMatrix(matrix + [dense(p)], (len(matrix) + 1, len(columns)), domain)
    return base.rank() == extended.rank()
