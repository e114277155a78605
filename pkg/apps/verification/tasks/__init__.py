from .verification_tasks import run_verification_task

__all__ = ["run_verification_task"]
