# config/__init__.py
# Celery-приложение загружается вместе с Django, чтобы @shared_task находили его
from .celery import app as celery_app

__all__ = ('celery_app',)
