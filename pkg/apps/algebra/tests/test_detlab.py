# apps/algebra/tests/test_detlab.py
from itertools import permutations

from django.test import SimpleTestCase
from sympy.combinatorics import Permutation

from apps.algebra.detlab import (
    MatrixKind,
    alien_cofactor_check,
    build,
    cofactor_identity_check,
    cofactor_sum,
    skew_quadratic_form,
    skew_relation_check,
)
from apps.algebra.exceptions import ShapeError


def leibniz_determinant(matrix):
    """Определитель суммой по перестановкам"""
    total = matrix.ring.zero
    for perm in permutations(range(matrix.n)):
        term = matrix.ring.constant(Permutation(list(perm)).signature())
        for row, col in enumerate(perm, start=1):
            term = term * matrix.entry(row, col + 1)
        total = total + term
    return total


class BuildTest(SimpleTestCase):
    def test_skew_structure(self):
        """Тест нулевой диагонали и entry(2,1) = -x(1,2)"""
        skew = build("skew", 3, 3)
        self.assertTrue(all(skew.entry(i, i).is_zero for i in range(1, 4)))
        self.assertEqual(skew.entry(2, 1), -skew.ring.x(1, 2))

    def test_generic_rectangular(self):
        matrix = build("generic", 3, 2)
        self.assertEqual(len(matrix.ring.x_variables()), 6)

    def test_symmetric_structure(self):
        matrix = build("symmetric", 2, 2)
        self.assertEqual(matrix.entry(1, 2), matrix.entry(2, 1))
        self.assertEqual(matrix.entry(2, 1), matrix.ring.x(1, 2))

    def test_shape_errors(self):
        """Тест ошибок формы и типа"""
        with self.assertRaises(ShapeError):
            build("symmetric", 2, 3)
        with self.assertRaises(ShapeError):
            build("skew", 3, 2)
        with self.assertRaises(ShapeError):
            build("generic", 0, 2)
        with self.assertRaises(ShapeError):
            build("hermitian", 2, 2)

    def test_kind_aliases(self):
        self.assertIs(MatrixKind.parse("skew-symmetric"), MatrixKind.SKEW)


class EntriesTest(SimpleTestCase):
    def test_generic_entries(self):
        matrix = build("generic", 2, 2)
        r = matrix.ring
        self.assertEqual(matrix.xy_entries(), [r.x(1, 1) * r.y(1) + r.x(1, 2) * r.y(2), r.x(2, 1) * r.y(1) + r.x(2, 2) * r.y(2)])

    def test_skew_entries(self):
        """Тест g1, g2, g3 кососимметрической матрицы 3x3"""
        matrix = build("skew", 3, 3)
        x, y = matrix.ring.x, matrix.ring.y
        self.assertEqual(
            matrix.xy_entries(),
            [
                x(1, 2) * y(2) + x(1, 3) * y(3),
                -x(1, 2) * y(1) + x(2, 3) * y(3),
                -x(1, 3) * y(1) - x(2, 3) * y(2),
            ],
        )

    def test_symmetric_entries(self):
        matrix = build("symmetric", 2, 2)
        x, y = matrix.ring.x, matrix.ring.y
        self.assertEqual(matrix.g(2), x(1, 2) * y(1) + x(2, 2) * y(2))


class DeterminantTest(SimpleTestCase):
    def test_generic_two(self):
        matrix = build("generic", 2, 2)
        x = matrix.ring.x
        self.assertEqual(matrix.determinant(), x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1))

    def test_odd_skew_vanishes(self):
        self.assertTrue(build("skew", 3, 3).determinant().is_zero)

    def test_matches_permutation_sum(self):
        """Тест совпадения разложения Лапласа с суммой по перестановкам"""
        for kind in MatrixKind:
            for n in range(1, 5):
                matrix = build(kind, n, n)
                self.assertEqual(matrix.determinant(), leibniz_determinant(matrix), f"{kind.value} {n}")

    def test_laplace_along_first_column(self):
        matrix = build("generic", 3, 3)
        self.assertEqual(cofactor_sum(matrix, 1, 1), matrix.determinant())

    def test_row_deleted_minors(self):
        """Тест миноров Δ_i матрицы 3x2"""
        matrix = build("generic", 3, 2)
        x = matrix.ring.x
        minors = matrix.row_deleted_minors()
        self.assertEqual(minors[0], x(2, 1) * x(3, 2) - x(2, 2) * x(3, 1))
        self.assertEqual(len(minors), 3)
        with self.assertRaises(ShapeError):
            build("generic", 2, 2).row_deleted_minor(1)

    def test_non_square_determinant(self):
        with self.assertRaises(ShapeError):
            build("generic", 2, 3).determinant()

    def test_macros(self):
        square = build("generic", 2, 2).macros()
        self.assertEqual(set(square), {"g[1]", "g[2]", "det"})
        rect = build("generic", 3, 2).macros()
        self.assertEqual(set(rect), {"g[1]", "g[2]", "g[3]", "minor[1]", "minor[2]", "minor[3]"})


class IdentitiesTest(SimpleTestCase):
    def test_cofactor_identity_generic_two(self):
        """Тест Δ*y1 = x22*g1 - x12*g2"""
        matrix = build("generic", 2, 2)
        self.assertEqual(matrix.cofactor(1, 1), matrix.ring.x(2, 2))
        self.assertEqual(matrix.cofactor(2, 1), -matrix.ring.x(1, 2))
        self.assertTrue(cofactor_identity_check(matrix, 1))

    def test_cofactor_identity_all_indices(self):
        for kind in ("generic", "symmetric"):
            for n in range(1, 5):
                matrix = build(kind, n, n)
                for i in range(1, n + 1):
                    self.assertTrue(cofactor_identity_check(matrix, i), f"{kind} n={n} i={i}")

    def test_alien_cofactors(self):
        """Тест: сумма чужих дополнений равна нулю"""
        matrix = build("generic", 3, 3)
        for i in range(1, 4):
            for k in range(1, 4):
                self.assertTrue(alien_cofactor_check(matrix, i, k))
        self.assertTrue(cofactor_sum(matrix, 1, 2).is_zero)

    def test_skew_relation(self):
        """Тест y_n*g_n = -sum y_i*g_i для n = 2..5"""
        for n in range(2, 6):
            self.assertTrue(skew_relation_check(build("skew", n, n)), f"n={n}")

    def test_skew_quadratic_form_vanishes(self):
        for n in range(1, 5):
            self.assertTrue(skew_quadratic_form(build("skew", n, n)).is_zero)

    def test_skew_relation_requires_skew(self):
        with self.assertRaises(ShapeError):
            skew_relation_check(build("generic", 2, 2))
