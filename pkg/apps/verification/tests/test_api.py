# apps/verification/tests/test_api.py
from django.contrib.auth.models import User
from django.test import TestCase
from django.urls import reverse
from rest_framework.test import APIClient

from apps.verification.models import ClaimReport, VerificationRun
from apps.verification.services import ClaimId, Status, make_instance, run
from apps.verification.services.persistence import execute_run, save_summary


class VerificationRunAPITest(TestCase):
    """Интеграционные тесты API запусков"""

    def setUp(self):
        self.client = APIClient()
        self.user = User.objects.create_user(username='tester', password='testpass123')
        self.client.force_authenticate(user=self.user)

    def test_create_run_executes_task(self):
        """Тест: запуск создаётся, задача выполняется сразу (eager)"""
        response = self.client.post(
            reverse('run-list'),
            {'claim': 'skew-relation', 'params': {'n': 3}},
            format='json',
        )
        self.assertEqual(response.status_code, 202)
        self.assertEqual(response.data['status'], 'accepted')
        self.assertEqual(response.data['run']['status'], 'passed')
        self.assertEqual(response.data['run']['exit_code'], 0)
        self.assertEqual(response.data['run']['reports_count'], 1)

    def test_reports_action(self):
        """Тест: отчёты запуска выдаются в порядке экземпляров"""
        response = self.client.post(
            reverse('run-list'),
            {'claim': 'cofactor-identity', 'params': {'kind': 'symmetric', 'n': 2}},
            format='json',
        )
        run_id = response.data['run_id']
        response = self.client.get(reverse('run-reports', kwargs={'pk': run_id}))
        self.assertEqual(response.status_code, 200)
        results = response.data['results']
        self.assertEqual(len(results), 1)
        self.assertEqual(results[0]['claim'], 'cofactor-identity')
        self.assertEqual(results[0]['kind'], 'symmetric')
        self.assertEqual(results[0]['status'], 'verified')
        self.assertFalse(results[0]['unexpected'])

    def test_unknown_parameter_rejected(self):
        response = self.client.post(
            reverse('run-list'),
            {'claim': 'skew-relation', 'params': {'n': 3, 't': 1}},
            format='json',
        )
        self.assertEqual(response.status_code, 400)
        self.assertIn('params', response.data)

    def test_out_of_range_saturation_rejected(self):
        """Тест: недопустимое сочетание параметров отклоняется до постановки задачи"""
        response = self.client.post(
            reverse('run-list'),
            {'claim': 'saturated', 'params': {'kind': 'generic', 'n': 2, 't': 5}},
            format='json',
        )
        self.assertEqual(response.status_code, 400)
        self.assertIn('params', response.data)
        self.assertFalse(VerificationRun.objects.exists())

    def test_invalid_shapes_rejected(self):
        for params in (
            {'claim': 'regular-sequence', 'params': {'kind': 'symmetric', 'm': 2, 'n': 3}},
            {'claim': 'decomposition-square', 'params': {'kind': 'skew', 'n': 2}},
            {'claim': 'quotient-stability', 'params': {'n': 2, 'i': 3}},
            {'claim': 'quotient-stability', 'params': {'n': 2}},
            {'claim': 'torsionfree', 'params': {'kind': 'symmetric', 'n': 1, 'k': 1, 'm': 2}},
            {'claim': 'skew-relation', 'params': {'n': 40}},
        ):
            with self.subTest(params=params):
                response = self.client.post(reverse('run-list'), params, format='json')
                self.assertEqual(response.status_code, 400)
                self.assertIn('params', response.data)

    def test_failed_execution_marks_run(self):
        """Тест: ошибка параметров при выполнении переводит запуск в failed с кодом 2"""
        stored = VerificationRun.objects.create(
            claim='saturated', params={'kind': 'generic', 'n': 2, 't': 5}
        )
        result = execute_run(stored, jobs=1)
        stored.refresh_from_db()
        self.assertEqual(result.status, 'failed')
        self.assertEqual(stored.status, 'failed')
        self.assertEqual(stored.exit_code, 2)
        self.assertIn('t=5', stored.summary['error'])
        self.assertIsNotNone(stored.finished_at)
        self.assertFalse(stored.reports.exists())

    def test_params_without_claim_rejected(self):
        response = self.client.post(reverse('run-list'), {'params': {'n': 3}}, format='json')
        self.assertEqual(response.status_code, 400)

    def test_non_prime_field_rejected(self):
        response = self.client.post(
            reverse('run-list'),
            {'claim': 'skew-relation', 'params': {'n': 3}, 'field_spec': 'gf(4)'},
            format='json',
        )
        self.assertEqual(response.status_code, 400)
        self.assertIn('field_spec', response.data)

    def test_max_n_bounds(self):
        response = self.client.post(reverse('run-list'), {'max_n': 9}, format='json')
        self.assertEqual(response.status_code, 400)
        self.assertIn('max_n', response.data)

    def test_unauthenticated_access(self):
        client = APIClient()
        response = client.get(reverse('run-list'))
        self.assertEqual(response.status_code, 403)

    def test_list_filter_by_status(self):
        VerificationRun.objects.create(claim='skew-relation', status='failed')
        VerificationRun.objects.create(claim='skew-relation', status='passed')
        response = self.client.get(reverse('run-list'), {'status': 'failed'})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.data['count'], 1)


class ClaimReportAPITest(TestCase):
    """Тесты API отчётов и сохранения результатов"""

    def setUp(self):
        self.client = APIClient()
        self.user = User.objects.create_user(username='tester', password='testpass123')
        self.client.force_authenticate(user=self.user)

        instances = [
            make_instance(ClaimId.SKEW_RELATION, n=2),
            make_instance(ClaimId.SATURATED, kind='generic', n=2, t=2),
        ]
        self.summary = run(instances)
        self.verification_run = save_summary(self.summary, claim='', max_n=2)

    def test_save_summary(self):
        """Тест: отчёты пишутся по порядку, статус запуска отражает неожиданные результаты"""
        reports = list(self.verification_run.reports.order_by('position'))
        self.assertEqual([r.claim for r in reports], ['skew-relation', 'saturated'])
        self.assertEqual(reports[1].status, Status.REFUTED.value)
        self.assertTrue(reports[1].unexpected)
        self.assertEqual(self.verification_run.status, 'failed')
        self.assertEqual(self.verification_run.exit_code, 1)
        self.assertEqual(self.verification_run.summary['counts'], self.summary.to_dict()['counts'])

    def test_filter_by_claim(self):
        response = self.client.get(reverse('report-list'), {'claim': 'saturated'})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.data['count'], 1)
        self.assertEqual(response.data['results'][0]['params'], {'kind': 'generic', 'n': 2, 't': 2})

    def test_filter_by_status(self):
        response = self.client.get(reverse('report-list'), {'status': 'verified'})
        self.assertEqual(response.data['count'], 1)
        self.assertEqual(response.data['results'][0]['claim'], 'skew-relation')

    def test_execute_run_replaces_reports(self):
        """Тест: повторное выполнение запуска перезаписывает отчёты"""
        stored = VerificationRun.objects.create(claim='skew-relation', params={'n': 3})
        execute_run(stored, jobs=1)
        execute_run(stored, jobs=1)
        stored.refresh_from_db()
        self.assertEqual(stored.status, 'passed')
        self.assertEqual(ClaimReport.objects.filter(run=stored).count(), 1)
        self.assertIsNotNone(stored.finished_at)

    def test_expected_refutation_with_evidence(self):
        """Тест: ожидаемое опровержение с пройденными свидетельствами не считается неожиданным"""
        summary = run([make_instance(ClaimId.SATURATED, Status.REFUTED, kind='generic', n=2, t=2)])
        stored = save_summary(summary, claim='saturated', max_n=2)
        report = stored.reports.get()
        evidence = [s for s in report.subchecks if s['evidence']]
        self.assertEqual(len(evidence), 2)
        self.assertTrue(all(s['passed'] for s in evidence))
        self.assertFalse(report.unexpected)
        self.assertEqual(stored.exit_code, 0)

        report.subchecks = [dict(s, passed=False) if s['evidence'] else s for s in report.subchecks]
        self.assertTrue(report.unexpected)
