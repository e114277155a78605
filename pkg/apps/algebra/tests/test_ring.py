# apps/algebra/tests/test_ring.py
from fractions import Fraction
from unittest import mock

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from apps.algebra.detlab import build
from apps.algebra.exceptions import FieldMismatchError, OrderError, ZeroPolynomialError
from apps.algebra.ring import (
    ONE,
    ExponentVector,
    MonomialOrder,
    Ordering,
    Variable,
    compare,
    complete_order,
    diagonal_order,
    leading_term,
    moved_y_order,
    poly_add,
    poly_mul,
    superdiagonal_order,
    univariate_lead,
    y_first_order,
)
from apps.algebra.ring.orders import KEY_CACHE_SIZE

GENERIC_2 = build("generic", 2, 2)
RING = GENERIC_2.ring

exponent_vectors = st.lists(st.integers(min_value=0, max_value=3), min_size=len(RING), max_size=len(RING)).map(
    lambda exps: ExponentVector.from_pairs(enumerate(exps))
)
polynomials = st.dictionaries(
    exponent_vectors, st.integers(min_value=-5, max_value=5).filter(bool), min_size=1, max_size=4
).map(RING.from_dict)


def mono(*pairs):
    return ExponentVector.from_pairs((RING.index(v), e) for v, e in pairs)


X11, X12, X21, X22 = Variable.x(1, 1), Variable.x(1, 2), Variable.x(2, 1), Variable.x(2, 2)
Y1, Y2 = Variable.y(1), Variable.y(2)


class ExponentVectorTest(SimpleTestCase):
    def test_no_zero_entries(self):
        """Тест отсутствия нулевых показателей и подсчёта степени"""
        m = ExponentVector.from_pairs([(0, 2), (3, 0), (1, 1)])
        self.assertEqual(tuple(m), ((0, 2), (1, 1)))
        self.assertEqual(m.degree, 3)

    def test_division_lcm_and_coprimality(self):
        a = ExponentVector.from_pairs([(0, 2), (4, 1)])
        b = ExponentVector.from_pairs([(0, 1), (5, 1)])
        self.assertEqual(a.lcm(b), ExponentVector.from_pairs([(0, 2), (4, 1), (5, 1)]))
        self.assertEqual(a * b / b, a)
        self.assertFalse(a.is_coprime(b))
        self.assertTrue(ExponentVector.variable(4).is_coprime(b))
        self.assertFalse(a.is_squarefree())
        with self.assertRaises(ValueError):
            b / a


class MonomialOrderTest(SimpleTestCase):
    def setUp(self):
        self.diagonal = diagonal_order(RING, 2)
        self.grob = y_first_order(RING)

    def test_diagonal_order_dominance(self):
        """Тест: при x11 > x22 > остальные x11*y1 старше x12*y2"""
        self.assertEqual(compare(self.diagonal, mono((X11, 1), (Y1, 1)), mono((X12, 1), (Y2, 1))), Ordering.GT)

    def test_equal_monomials(self):
        u = mono((X21, 2))
        self.assertEqual(compare(self.diagonal, u, u), Ordering.EQ)

    def test_y_first_order(self):
        """Тест: y2 старше любой x-переменной"""
        self.assertEqual(compare(self.grob, mono((Y2, 1), (X11, 1)), mono((X11, 2))), Ordering.GT)

    def test_completion_is_deterministic(self):
        """Тест дополнения цепочки: остальные x построчно, затем y"""
        self.assertEqual(self.diagonal.priority, (X11, X22, X12, X21, Y1, Y2))
        self.assertEqual(self.diagonal.to_text(), "order lex: x[1][1] > x[2][2] > x[1][2] > x[2][1] > y[1] > y[2]")

    def test_superdiagonal_order(self):
        skew = build("skew", 4, 4)
        order = superdiagonal_order(skew.ring, 4)
        self.assertEqual(order.priority[:3], (Variable.x(3, 4), Variable.x(2, 3), Variable.x(1, 2)))

    def test_moved_y_order(self):
        order = moved_y_order(RING, 1)
        self.assertEqual(order.priority[:2], (Y2, Y1))

    def test_incomplete_priority_list(self):
        """Тест ошибки для порядка, не покрывающего все переменные"""
        with self.assertRaises(OrderError):
            MonomialOrder(RING, [X11, X12])

    def test_duplicate_variable(self):
        with self.assertRaises(OrderError):
            complete_order(RING, [X11, X11])

    def test_monomial_outside_order(self):
        """Тест ошибки для монома с переменной вне списка приоритетов"""
        extended = RING.extend("t")
        foreign = ExponentVector.variable(extended.index(extended.aux_variables()[0]))
        with self.assertRaises(OrderError):
            self.grob.key(foreign)

    def test_key_cache_is_bounded(self):
        """Тест: кэш ключей порядка не растёт сверх заданного размера"""
        with mock.patch("apps.algebra.ring.orders.KEY_CACHE_SIZE", 4):
            order = y_first_order(RING)
        monomials = [mono((X11, e), (Y2, 1)) for e in range(1, 11)]
        keys = [order.key(m) for m in monomials]
        heap_keys = [order.heap_key(m) for m in monomials]
        self.assertEqual(order.key.cache_info().maxsize, 4)
        self.assertLessEqual(order.key.cache_info().currsize, 4)
        self.assertLessEqual(order.heap_key.cache_info().currsize, 4)
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(heap_keys, [tuple(-e for e in k) for k in keys])
        self.assertEqual(self.grob.key.cache_info().maxsize, KEY_CACHE_SIZE)

    @settings(max_examples=200, deadline=None)
    @given(exponent_vectors, exponent_vectors, exponent_vectors)
    def test_order_axioms(self, u, v, w):
        """Тест totality, мультипликативности и минимальности единицы"""
        for order in (self.diagonal, self.grob):
            forward, backward = order.compare(u, v), order.compare(v, u)
            self.assertEqual(forward, -backward)
            self.assertEqual(forward == Ordering.EQ, u == v)
            if forward == Ordering.LT:
                self.assertEqual(order.compare(u * w, v * w), Ordering.LT)
            self.assertNotEqual(order.compare(ONE, u), Ordering.GT)


class PolynomialTest(SimpleTestCase):
    def setUp(self):
        self.g1, self.g2 = GENERIC_2.xy_entries()
        self.delta = GENERIC_2.determinant()

    def test_leading_term_under_diagonal_order(self):
        """Тест старшего терма g1 при порядке x11 > x22 > ..."""
        self.assertEqual(leading_term(diagonal_order(RING, 2), self.g1), (Fraction(1), mono((X11, 1), (Y1, 1))))

    def test_leading_term_of_constant(self):
        self.assertEqual(leading_term(RING.default_order, RING.constant(5)), (Fraction(5), ONE))

    def test_leading_term_of_zero(self):
        with self.assertRaises(ZeroPolynomialError):
            leading_term(RING.default_order, RING.zero)

    def test_skew_leading_term(self):
        """Тест старшего терма g2 = -x12*y1 + x23*y3 при x12 < x23"""
        skew = build("skew", 3, 3)
        order = superdiagonal_order(skew.ring, 3)
        coeff, monomial = skew.g(2).leading_term(order)
        self.assertEqual(coeff, 1)
        self.assertEqual(skew.ring.monomial(monomial), skew.ring.x(2, 3) * skew.ring.y(3))

    def test_additive_inverse(self):
        self.assertTrue(poly_add(self.g1, -self.g1).is_zero)

    def test_coefficient(self):
        self.assertEqual(self.delta.coefficient(mono((X12, 1), (X21, 1))), -1)
        self.assertEqual(self.delta.coefficient(mono((Y1, 1))), 0)

    def test_multiplicative_unit(self):
        self.assertEqual(poly_mul(self.g1, RING.one), self.g1)

    def test_cofactor_combination(self):
        """Тест x22*g1 - x12*g2 = Δ*y1 в общей матрице 2x2"""
        combination = RING.x(2, 2) * self.g1 - RING.x(1, 2) * self.g2
        self.assertEqual(combination, self.delta * RING.y(1))

    def test_canonical_printing(self):
        self.assertEqual(str(self.g1), "x[1][1]*y[1] + x[1][2]*y[2]")
        self.assertEqual(str(self.delta), "x[1][1]*x[2][2] - x[1][2]*x[2][1]")
        self.assertEqual(str(RING.x(1, 1) ** 2 - Fraction(1, 2)), "x[1][1]^2 - 1/2")
        self.assertEqual(str(RING.zero), "0")

    def test_univariate_lead(self):
        """Тест старшего коэффициента g1 по переменной x[1][2]"""
        degree, coeff = univariate_lead(self.g1, X12)
        self.assertEqual(degree, 1)
        self.assertEqual(coeff, RING.y(2))

    def test_ring_mismatch(self):
        other = build("generic", 2, 3).ring
        with self.assertRaises(FieldMismatchError):
            self.g1 + other.y(3)

    def test_lift_and_restrict(self):
        """Тест подъёма в расширенное кольцо без изменения мономов"""
        extended = RING.extend("t")
        lifted = extended.lift(self.g1)
        self.assertEqual(RING.restrict(lifted), self.g1)
        t = extended.var(extended.aux_variables()[0])
        with self.assertRaises(FieldMismatchError):
            RING.restrict(lifted * t)

    @settings(max_examples=100, deadline=None)
    @given(polynomials, polynomials)
    def test_leading_term_is_multiplicative(self, p, q):
        """Тест LT(p*q) = LT(p)*LT(q)"""
        order = y_first_order(RING)
        cp, mp = p.leading_term(order)
        cq, mq = q.leading_term(order)
        self.assertEqual((p * q).leading_term(order), (cp * cq, mp * mq))

    @settings(max_examples=100, deadline=None)
    @given(polynomials, polynomials, polynomials)
    def test_ring_axioms(self, p, q, r):
        self.assertEqual((p + q) + r, p + (q + r))
        self.assertEqual(p * (q + r), p * q + p * r)
        self.assertEqual(p * q, q * p)
