# config/celery.py
import os
from celery import Celery

# Установка переменной окружения для настроек Django
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')

app = Celery('detideals')

# Загрузка настроек из файла settings.py
app.config_from_object('django.conf:settings', namespace='CELERY')

# Автоматическое обнаружение задач (apps/*/tasks)
app.autodiscover_tasks(related_name='tasks')
