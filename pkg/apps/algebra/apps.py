from django.apps import AppConfig


class AlgebraConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.algebra"
    verbose_name = "Вычислительное ядро"
