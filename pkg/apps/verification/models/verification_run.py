# apps/verification/models/verification_run.py
from typing import List

from django.conf import settings
from django.db import models
from django.utils import timezone
from django.utils.translation import gettext_lazy as _

from apps.core.models.base import TimeStampedModel
from apps.verification.services import CheckOptions, ClaimId, Instance, instances_for
from apps.verification.services.runner import EXIT_USAGE, Summary


class VerificationRun(TimeStampedModel):
    """Запуск набора проверок: одно утверждение или вся сетка"""
    STATUS_CHOICES = [
        ('pending', _('Ожидает запуска')),
        ('running', _('Выполняется')),
        ('passed', _('Пройден')),
        ('failed', _('Есть неожиданные результаты')),
    ]
    CLAIM_CHOICES = [(claim.value, claim.value) for claim in ClaimId]

    claim = models.CharField(_('Утверждение'), max_length=40, choices=CLAIM_CHOICES, blank=True, default='')
    params = models.JSONField(_('Параметры экземпляра'), default=dict, blank=True)
    max_n = models.PositiveSmallIntegerField(_('Максимальное n'), default=2)
    field_spec = models.CharField(_('Поле коэффициентов'), max_length=40, default='rationals')
    max_pairs = models.PositiveIntegerField(_('Лимит пар'), null=True, blank=True)
    timeout = models.FloatField(_('Лимит времени на экземпляр, с'), null=True, blank=True)

    status = models.CharField(_('Статус'), max_length=20, choices=STATUS_CHOICES, default='pending')
    summary = models.JSONField(_('Сводка'), default=dict, blank=True)
    exit_code = models.SmallIntegerField(_('Код завершения'), null=True, blank=True)
    finished_at = models.DateTimeField(_('Время завершения'), null=True, blank=True)

    class Meta:
        verbose_name = _('Запуск проверки')
        verbose_name_plural = _('Запуски проверок')
        ordering = ['-created_at']
        indexes = [
            models.Index(fields=['status'], name='verif_run_status_idx'),
            models.Index(fields=['claim'], name='verif_run_claim_idx'),
        ]

    def __str__(self):
        return f"Запуск #{self.pk}: {self.claim or 'все утверждения'} ({self.get_status_display()})"

    def options(self) -> CheckOptions:
        return CheckOptions(
            field_spec=self.field_spec,
            max_pairs=self.max_pairs or settings.ALGEBRA_MAX_PAIRS,
            max_terms=settings.ALGEBRA_MAX_TERMS,
            timeout=self.timeout or settings.VERIFY_TIMEOUT_SECONDS,
        )

    def instances(self) -> List[Instance]:
        claim = ClaimId(self.claim) if self.claim else None
        return instances_for(claim, max_n=self.max_n, **self.params)

    def mark_running(self) -> None:
        self.status = 'running'
        self.save(update_fields=['status', 'updated_at'])

    def mark_finished(self, summary: Summary) -> None:
        self.summary = summary.to_dict()
        self.exit_code = summary.exit_code
        self.status = 'passed' if summary.passed else 'failed'
        self.finished_at = timezone.now()
        self.save(update_fields=['summary', 'exit_code', 'status', 'finished_at', 'updated_at'])

    def mark_failed(self, message: str) -> None:
        """Запуск не выполнился: ошибка параметров или ядра, отчётов нет"""
        self.summary = {'error': message}
        self.exit_code = EXIT_USAGE
        self.status = 'failed'
        self.finished_at = timezone.now()
        self.save(update_fields=['summary', 'exit_code', 'status', 'finished_at', 'updated_at'])
