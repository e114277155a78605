from celery import shared_task

from ..models import VerificationRun
from ..services.persistence import execute_run


@shared_task
def run_verification_task(run_id: int) -> str:
    """Асинхронная задача выполнения сохранённого запуска проверок"""
    verification_run = VerificationRun.objects.get(id=run_id)
    return execute_run(verification_run).status
