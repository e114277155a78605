"""
Иерархия ошибок вычислительного ядра.

Ядро не знает о Django: слой команд (apps.verification.cli) переводит эти
исключения в CommandError с кодами выхода, а проверки теорем превращают
BudgetExceededError в статус отчёта.
"""
from typing import Any, Optional


class AlgebraError(Exception):
    """Базовая ошибка ядра"""


class FieldError(AlgebraError):
    """Ошибка арифметики поля коэффициентов"""


class DivisionByZeroError(FieldError, ZeroDivisionError):
    """Деление на нулевой элемент поля"""


class ModulusMismatchError(FieldError):
    """Смешение элементов разных полей (разные модули или Q и GF(p))"""


class FieldMismatchError(AlgebraError):
    """Операция над многочленами из разных колец"""


class OrderError(AlgebraError):
    """Мономиальный порядок не покрывает переменные кольца"""


class ZeroPolynomialError(AlgebraError):
    """Операция не определена для нулевого многочлена"""


class ShapeError(AlgebraError):
    """Недопустимая форма или тип матрицы"""


class ParseError(AlgebraError):
    """Синтаксическая ошибка во входном тексте"""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (строка {line}, столбец {column})")


class UnknownVariableError(ParseError):
    """Переменная не объявлена в кольце"""


class ExponentOverflowError(ParseError):
    """Показатель степени превышает допустимый предел"""


class BudgetExceededError(AlgebraError):
    """Исчерпан ресурсный бюджет алгоритма Бухбергера"""

    def __init__(self, message: str, stats: Optional[Any] = None):
        self.stats = stats
        super().__init__(message)
