# apps/verification/models/claim_report.py
from django.db import models
from django.utils.translation import gettext_lazy as _

from apps.core.models.base import TimeStampedModel
from apps.verification.services import ClaimId, Report, Status
from .verification_run import VerificationRun


class ClaimReport(TimeStampedModel):
    """Сохранённый отчёт об одном экземпляре проверки"""
    CLAIM_CHOICES = [(claim.value, claim.value) for claim in ClaimId]
    STATUS_CHOICES = [(status.value, status.label) for status in Status]

    run = models.ForeignKey(
        VerificationRun,
        on_delete=models.CASCADE,
        related_name='reports',
        verbose_name=_('Запуск')
    )
    position = models.PositiveIntegerField(_('Позиция в запуске'))
    claim = models.CharField(_('Утверждение'), max_length=40, choices=CLAIM_CHOICES)
    kind = models.CharField(_('Тип матрицы'), max_length=20, blank=True, default='')
    params = models.JSONField(_('Параметры'), default=dict)
    status = models.CharField(_('Статус'), max_length=30, choices=STATUS_CHOICES)
    expected_status = models.CharField(_('Ожидаемый статус'), max_length=30, choices=STATUS_CHOICES, blank=True, default='')
    stretch = models.BooleanField(_('Расширенный экземпляр'), default=False)
    order_text = models.TextField(_('Мономиальный порядок'), blank=True, default='')
    subchecks = models.JSONField(_('Подпроверки'), default=list)
    witnesses = models.JSONField(_('Свидетельства'), default=dict)
    stats = models.JSONField(_('Статистика базисов'), default=dict)
    notes = models.JSONField(_('Примечания'), default=list)
    elapsed_ms = models.PositiveIntegerField(_('Время, мс'), default=0)

    class Meta:
        verbose_name = _('Отчёт о проверке')
        verbose_name_plural = _('Отчёты о проверках')
        ordering = ['run', 'position']
        constraints = [
            models.UniqueConstraint(fields=['run', 'position'], name='unique_report_position'),
        ]
        indexes = [
            models.Index(fields=['claim', 'status'], name='verif_report_claim_status_idx'),
        ]

    def __str__(self):
        return f"{self.claim} {self.params}: {self.status}"

    @classmethod
    def from_report(cls, run: VerificationRun, position: int, report: Report) -> "ClaimReport":
        data = report.to_dict()
        return cls(
            run=run,
            position=position,
            claim=data['claim'],
            kind=report.matrix_kind,
            params=data['params'],
            status=data['status'],
            expected_status=data['expected'] or '',
            stretch=data['stretch'],
            order_text=data['order'],
            subchecks=data['subchecks'],
            witnesses=data['witnesses'],
            stats=data['stats'],
            notes=data['notes'],
            elapsed_ms=data['elapsed_ms'],
        )

    @property
    def unexpected(self) -> bool:
        if self.status == Status.BUDGET_EXCEEDED.value:
            return not self.stretch
        if self.expected_status:
            if self.status != self.expected_status:
                return True
            evidence = [s['passed'] for s in self.subchecks if s.get('evidence')]
            return self.status == Status.REFUTED.value and not all(evidence)
        return self.status == Status.REFUTED.value
