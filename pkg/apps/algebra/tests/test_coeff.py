# apps/algebra/tests/test_coeff.py
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from apps.algebra.coeff import DEFAULT_PRIME, QQ, PrimeField, PrimeFieldElement, field_from_spec
from apps.algebra.exceptions import DivisionByZeroError, FieldError, ModulusMismatchError, ParseError

rationals = st.fractions(max_denominator=10 ** 6)
residues = st.integers(min_value=-(10 ** 12), max_value=10 ** 12)


class RationalFieldTest(SimpleTestCase):
    def test_sum_of_fractions(self):
        """Тест точного сложения 1/2 + 1/3"""
        self.assertEqual(QQ.add(Fraction(1, 2), Fraction(1, 3)), Fraction(5, 6))

    def test_canonical_form(self):
        """Тест несократимой записи с положительным знаменателем"""
        value = QQ.coerce(Fraction(4, -6))
        self.assertEqual((value.numerator, value.denominator), (-2, 3))
        self.assertEqual(QQ.zero.denominator, 1)

    def test_division_by_zero(self):
        """Тест явной ошибки деления на ноль"""
        with self.assertRaises(DivisionByZeroError):
            QQ.div(1, 0)

    def test_parse_and_format(self):
        """Тест текстовой формы -7/3 и 5"""
        self.assertEqual(QQ.parse("-7/3"), Fraction(-7, 3))
        self.assertEqual(QQ.parse("5"), Fraction(5))
        self.assertEqual(QQ.format(Fraction(-7, 3)), "-7/3")

    def test_parse_rejects_modulus(self):
        """Тест запрета записи 'mod p' для рациональных чисел"""
        with self.assertRaises(ModulusMismatchError):
            QQ.parse("3 mod 7")

    def test_parse_garbage(self):
        with self.assertRaises(ParseError):
            QQ.parse("1.5")

    def test_mixing_with_prime_field(self):
        """Тест запрета смешения Q и GF(p)"""
        with self.assertRaises(ModulusMismatchError):
            QQ.coerce(PrimeFieldElement(3, 7))

    @settings(max_examples=200, deadline=None)
    @given(rationals, rationals, rationals)
    def test_field_axioms(self, a, b, c):
        """Тест ассоциативности и дистрибутивности на случайных элементах"""
        self.assertEqual(QQ.add(QQ.add(a, b), c), QQ.add(a, QQ.add(b, c)))
        self.assertEqual(QQ.mul(a, QQ.add(b, c)), QQ.add(QQ.mul(a, b), QQ.mul(a, c)))
        self.assertEqual(QQ.add(a, QQ.neg(a)), QQ.zero)

    @settings(max_examples=100, deadline=None)
    @given(rationals.filter(bool))
    def test_inverse(self, a):
        self.assertEqual(QQ.mul(a, QQ.inv(a)), QQ.one)


class PrimeFieldTest(SimpleTestCase):
    def setUp(self):
        self.gf7 = PrimeField(7)

    def test_product_in_gf7(self):
        """Тест 3 * 5 = 1 в GF(7)"""
        self.assertEqual(self.gf7.mul(3, 5), self.gf7.one)

    def test_residue_is_reduced(self):
        element = self.gf7.coerce(-1)
        self.assertEqual(element.residue, 6)
        self.assertEqual(str(element), "6 mod 7")

    def test_hash_agrees_with_int_equality(self):
        """Тест: элемент и равное ему целое попадают в один ключ словаря"""
        element = self.gf7.coerce(10)
        self.assertEqual(element, 3)
        self.assertEqual(hash(element), hash(3))
        self.assertNotEqual(element, 10)
        self.assertEqual({3: "three"}[element], "three")
        self.assertIn(element, {3, 5})
        self.assertEqual(len({element, PrimeFieldElement(3, 7), 3}), 1)

    def test_fraction_coercion(self):
        """Тест отображения 1/2 в обратный к 2 элемент"""
        self.assertEqual(self.gf7.coerce(Fraction(1, 2)), PrimeFieldElement(4, 7))

    def test_fraction_with_vanishing_denominator(self):
        with self.assertRaises(DivisionByZeroError):
            self.gf7.coerce(Fraction(1, 7))

    def test_modulus_mismatch(self):
        """Тест запрета смешения модулей"""
        with self.assertRaises(ModulusMismatchError):
            PrimeFieldElement(1, 7) + PrimeFieldElement(1, 11)

    def test_zero_has_no_inverse(self):
        with self.assertRaises(DivisionByZeroError):
            self.gf7.inv(0)

    def test_non_prime_modulus(self):
        with self.assertRaises(FieldError):
            PrimeField(91)

    def test_parse_with_modulus(self):
        """Тест разбора записи '3 mod 7'"""
        self.assertEqual(self.gf7.parse("3 mod 7"), PrimeFieldElement(3, 7))
        with self.assertRaises(ModulusMismatchError):
            self.gf7.parse("3 mod 11")

    @settings(max_examples=200, deadline=None)
    @given(residues, residues, residues)
    def test_field_axioms(self, a, b, c):
        field = PrimeField()
        a, b, c = field.coerce(a), field.coerce(b), field.coerce(c)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual(a * (b + c), a * b + a * c)
        if a:
            self.assertEqual(a * a.inverse(), field.one)

    @given(residues, residues)
    def test_equal_values_hash_equal(self, a, b):
        field = PrimeField(7)
        element = field.coerce(a)
        if element == b:
            self.assertEqual(hash(element), hash(b))
        self.assertEqual(element == field.coerce(b), hash(element) == hash(field.coerce(b)))

class FieldSpecTest(SimpleTestCase):
    def test_known_specs(self):
        self.assertIs(field_from_spec("rationals"), QQ)
        self.assertEqual(field_from_spec("gf(7)"), PrimeField(7))
        self.assertEqual(field_from_spec("GF(2147483647)").modulus, DEFAULT_PRIME)

    def test_unknown_spec(self):
        with self.assertRaises(FieldError):
            field_from_spec("reals")
