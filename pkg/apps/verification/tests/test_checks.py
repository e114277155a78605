# apps/verification/tests/test_checks.py
from django.test import SimpleTestCase, tag

from apps.algebra.exceptions import ShapeError
from apps.verification.services import CheckOptions, Status
from apps.verification.services.checks import (
    check_cofactor_identity,
    check_decomposition_rect,
    check_decomposition_square,
    check_gb_structure,
    check_nonprime_witness,
    check_primality,
    check_quotient_stability,
    check_regular_sequence,
    check_saturated,
    check_skew_relation,
    check_torsionfree_necessary,
)
from apps.verification.services.checks.torsionfree import torsion_witnesses
from apps.algebra.detlab import build


class RegularSequenceCheckTest(SimpleTestCase):
    def test_generic_square(self):
        """Тест: x11*y1 и x22*y2 - старшие термы в диагональном порядке"""
        report = check_regular_sequence("generic", 2, 2)
        self.assertEqual(report.status, Status.VERIFIED)
        self.assertEqual(report.witnesses["leading_terms"], ["x[1][1]*y[1]", "x[2][2]*y[2]"])
        self.assertTrue(report.order.startswith("order lex: x[1][1] > x[2][2] >"))

    def test_skew_uses_first_n_minus_one(self):
        report = check_regular_sequence("skew", 3, 3)
        self.assertEqual(report.status, Status.VERIFIED)
        self.assertEqual(report.witnesses["leading_terms"], ["x[1][2]*y[2]", "x[2][3]*y[3]"])

    def test_wide_generic(self):
        self.assertEqual(check_regular_sequence("generic", 2, 3).status, Status.VERIFIED)
        self.assertEqual(check_regular_sequence("generic", 3, 4).status, Status.VERIFIED)

    def test_symmetric_and_larger(self):
        for n in range(1, 5):
            with self.subTest(n=n):
                self.assertEqual(check_regular_sequence("symmetric", n, n).status, Status.VERIFIED)
        self.assertEqual(check_regular_sequence("skew", 5, 5).status, Status.VERIFIED)

    def test_invalid_shapes(self):
        with self.assertRaises(ShapeError):
            check_regular_sequence("generic", 3, 2)
        with self.assertRaises(ShapeError):
            check_regular_sequence("skew", 1, 1)


class SaturatedCheckTest(SimpleTestCase):
    def test_proper_initial_segment_is_saturated(self):
        report = check_saturated("generic", 2, 1)
        self.assertEqual(report.status, Status.VERIFIED)
        self.assertTrue(report.notes)

    def test_full_sequence_is_not_saturated(self):
        """Тест: насыщение <g1, g2> по y2 добавляет det"""
        report = check_saturated("generic", 2, 2)
        self.assertEqual(report.status, Status.REFUTED)
        evidence = {s.name: s.passed for s in report.subchecks if s.evidence}
        self.assertEqual(evidence, {"det lies in the saturation": True, "det lies outside the ideal": True})
        self.assertTrue(report.evidence_passed)
        self.assertEqual(report.witnesses["counterexample"], build("generic", 2, 2).determinant().to_text())

    def test_saturated_segment_has_no_evidence(self):
        report = check_saturated("generic", 2, 1)
        self.assertFalse([s for s in report.subchecks if s.evidence])
        self.assertNotIn("counterexample", report.witnesses)

    def test_symmetric(self):
        self.assertEqual(check_saturated("symmetric", 2, 1).status, Status.VERIFIED)
        self.assertEqual(check_saturated("symmetric", 2, 2).status, Status.REFUTED)

    def test_skew(self):
        self.assertEqual(check_saturated("skew", 3, 1).status, Status.VERIFIED)
        report = check_saturated("skew", 3, 2)
        self.assertEqual(report.status, Status.REFUTED)
        self.assertEqual(
            [s.name for s in report.subchecks if s.evidence and s.passed],
            ["g[n] lies in the saturation", "g[n] lies outside the ideal"],
        )
        self.assertTrue(report.witnesses["counterexample"])

    def test_out_of_range(self):
        with self.assertRaises(ShapeError):
            check_saturated("skew", 3, 3)
        with self.assertRaises(ShapeError):
            check_saturated("generic", 2, 3)

    @tag("slow")
    def test_generic_three(self):
        self.assertEqual(check_saturated("generic", 3, 2).status, Status.VERIFIED)


class PrimalityCheckTest(SimpleTestCase):
    def test_square_is_cited_with_evidence(self):
        report = check_primality("generic", 2, 2)
        self.assertEqual(report.status, Status.PAPER_CITED)
        self.assertTrue(report.passed)

    def test_wide_matrix(self):
        self.assertEqual(check_primality("generic", 1, 2).status, Status.PAPER_CITED)

    def test_skew_rejected(self):
        with self.assertRaises(ShapeError):
            check_primality("skew", 3, 3)


class GroebnerStructureCheckTest(SimpleTestCase):
    def test_one_by_one(self):
        report = check_gb_structure(1)
        self.assertEqual(report.status, Status.VERIFIED)
        self.assertEqual(report.witnesses["leading_terms"], ["x[1][1]"])

    def test_two_by_two(self):
        """Тест: базис {g1, g2, det*y2}, замена det*y2 на det даёт базис <g, det>"""
        report = check_gb_structure(2)
        self.assertEqual(report.status, Status.VERIFIED, report.subchecks)
        self.assertEqual(
            report.witnesses["leading_terms"],
            ["x[1][1]*y[1]", "x[2][1]*y[1]", "x[1][1]*x[2][2]"],
        )
        self.assertEqual(report.witnesses["extra_leading_terms"], ["x[1][1]*y[1]"])
        self.assertEqual(len(report.witnesses["basis"]), 3)

    @tag("slow")
    def test_three_by_three(self):
        self.assertEqual(check_gb_structure(3).status, Status.VERIFIED)


class QuotientStabilityCheckTest(SimpleTestCase):
    def test_each_index(self):
        for i in (1, 2):
            with self.subTest(i=i):
                report = check_quotient_stability(2, i)
                self.assertEqual(report.status, Status.VERIFIED)
        self.assertIn("y[2] > y[1] > x[1][1]", check_quotient_stability(2, 1).order)

    def test_index_out_of_range(self):
        with self.assertRaises(ShapeError):
            check_quotient_stability(2, 3)


class DecompositionCheckTest(SimpleTestCase):
    def test_square(self):
        for kind, n in (("generic", 1), ("generic", 2), ("symmetric", 2)):
            with self.subTest(kind=kind, n=n):
                report = check_decomposition_square(kind, n)
                self.assertEqual(report.status, Status.VERIFIED, report.subchecks)

    def test_rect_one(self):
        report = check_decomposition_rect(1)
        self.assertEqual(report.status, Status.VERIFIED)
        self.assertTrue(report.witnesses["literal_component_equal"])

    @tag("slow")
    def test_rect_two(self):
        """Тест: без g3 вторая компонента даёт другое пересечение"""
        report = check_decomposition_rect(2)
        self.assertEqual(report.status, Status.VERIFIED)
        self.assertFalse(report.witnesses["literal_component_equal"])

    def test_skew_rejected(self):
        with self.assertRaises(ShapeError):
            check_decomposition_square("skew", 2)


class NonprimeWitnessCheckTest(SimpleTestCase):
    def test_square_kinds(self):
        for kind in ("generic", "symmetric"):
            with self.subTest(kind=kind):
                self.assertEqual(check_nonprime_witness(kind, 2).status, Status.VERIFIED)

    def test_skew(self):
        report = check_nonprime_witness("skew", 3)
        self.assertEqual(report.status, Status.VERIFIED)
        self.assertEqual(len(report.witnesses["factors"]), 2)


class TorsionfreeCheckTest(SimpleTestCase):
    def test_witness_set(self):
        self.assertEqual(len(torsion_witnesses(build("generic", 1, 1))), 1)
        self.assertEqual(len(torsion_witnesses(build("generic", 2, 2))), 3)
        self.assertEqual(len(torsion_witnesses(build("generic", 3, 2))), 3)

    def test_principal_case(self):
        for k in (1, 2, 3):
            with self.subTest(k=k):
                report = check_torsionfree_necessary("generic", 1, k)
                self.assertEqual(report.status, Status.VERIFIED_NECESSARY)

    def test_rectangular_case(self):
        report = check_torsionfree_necessary("generic", 1, 2, m=2)
        self.assertEqual(report.status, Status.VERIFIED_NECESSARY)
        self.assertEqual(report.params, {"kind": "generic", "m": 2, "n": 1, "k": 2})

    @tag("slow")
    def test_generic_two_squared(self):
        report = check_torsionfree_necessary("generic", 2, 2)
        self.assertEqual(report.status, Status.VERIFIED_NECESSARY, report.subchecks)

    def test_invalid(self):
        with self.assertRaises(ShapeError):
            check_torsionfree_necessary("generic", 2, 4)
        with self.assertRaises(ShapeError):
            check_torsionfree_necessary("symmetric", 1, 2, m=2)


class IdentityCheckTest(SimpleTestCase):
    def test_cofactor(self):
        for kind in ("generic", "symmetric"):
            for n in range(1, 5):
                with self.subTest(kind=kind, n=n):
                    self.assertEqual(check_cofactor_identity(kind, n).status, Status.VERIFIED)

    def test_skew_relation(self):
        for n in range(2, 6):
            with self.subTest(n=n):
                self.assertEqual(check_skew_relation(n).status, Status.VERIFIED)


class BudgetTest(SimpleTestCase):
    def test_budget_exhaustion_is_reported(self):
        """Тест: исчерпание бюджета не бросает исключение, а даёт статус"""
        report = check_decomposition_square("generic", 2, options=CheckOptions(max_pairs=1))
        self.assertEqual(report.status, Status.BUDGET_EXCEEDED)
        self.assertTrue(report.notes)
        self.assertIn("pairs_processed", report.stats)
