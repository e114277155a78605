"""
Сохранение результатов прогона: запуск и его отчёты пишутся в одной транзакции.
"""
import logging
from typing import Optional

from django.conf import settings
from django.db import transaction

from apps.algebra.exceptions import AlgebraError
from apps.verification.models import ClaimReport, VerificationRun
from .runner import Summary, run

logger = logging.getLogger(__name__)


def save_summary(summary: Summary, verification_run: Optional[VerificationRun] = None, **run_fields) -> VerificationRun:
    with transaction.atomic():
        if verification_run is None:
            verification_run = VerificationRun.objects.create(**run_fields)
        verification_run.reports.all().delete()
        ClaimReport.objects.bulk_create(
            ClaimReport.from_report(verification_run, position, report)
            for position, report in enumerate(summary.reports)
        )
        verification_run.mark_finished(summary)
    logger.info("Запуск #%s сохранён: %s", verification_run.pk, verification_run.status)
    return verification_run


def execute_run(verification_run: VerificationRun, jobs: Optional[int] = None) -> VerificationRun:
    """Выполнить сохранённый запуск и записать отчёты"""
    verification_run.mark_running()
    try:
        summary = run(
            verification_run.instances(),
            verification_run.options(),
            jobs if jobs is not None else settings.VERIFY_JOBS,
        )
    except (ValueError, AlgebraError) as exc:
        logger.error("Запуск #%s не выполнен: %s", verification_run.pk, exc)
        verification_run.mark_failed(str(exc))
        return verification_run
    return save_summary(summary, verification_run)
