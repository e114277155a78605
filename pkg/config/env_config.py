import os
from dotenv import load_dotenv

# Переменные окружения из .env в корне проекта (ALGEBRA_*, VERIFY_*, LOG_LEVEL, ...)
load_dotenv()

_TRUE_VALUES = ('true', '1', 'yes', 'on')


def get_env_variable(var_name, default_value=None, cast_type=None):
    """
    Значение переменной окружения с приведением типа.
    Пустая строка и неприводимое значение дают default_value.
    """
    value = os.environ.get(var_name)
    if value is None or value.strip() == '':
        return default_value
    if cast_type is None:
        return value
    if cast_type is bool:
        return value.strip().lower() in _TRUE_VALUES
    try:
        return cast_type(value)
    except (ValueError, TypeError):
        return default_value
