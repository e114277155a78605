"""
Базовый класс management-команд ядра: общие флаги сеанса и перевод
ошибок в коды завершения (1 - опровержение, 2 - ошибка ввода, 3 - бюджет).
"""
import json
import logging
from typing import Any, Iterable

from django.core.management.base import BaseCommand, CommandError

from apps.algebra.exceptions import AlgebraError, BudgetExceededError
from .session import ORDER_PRESETS, SessionConfig

logger = logging.getLogger(__name__)

EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class ExpectationFailed(Exception):
    """Результат не совпал с ожидаемым (--expect)"""


class AlgebraCommand(BaseCommand):
    default_kind = "generic"
    default_n = 2

    def add_arguments(self, parser):
        group = parser.add_argument_group("кольцо и матрица")
        group.add_argument("--kind", choices=["generic", "symmetric", "skew"], default=self.default_kind)
        group.add_argument("--m", type=int, help="число строк (по умолчанию n)")
        group.add_argument("--n", type=int, default=self.default_n, help="число столбцов")
        group.add_argument("--field", help="rationals или gf(p)")
        group.add_argument(
            "--order",
            help=f"пресет ({', '.join(ORDER_PRESETS)}) или список 'x[1][1] > y[1] > ...rest'",
        )
        budget = parser.add_argument_group("бюджет")
        budget.add_argument("--max-pairs", type=int)
        budget.add_argument("--max-terms", type=int)
        budget.add_argument("--timeout", type=float, help="секунды")
        parser.add_argument("--format", choices=["text", "json"], default="text")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            session = SessionConfig.from_options(options)
            self.run(session, **options)
        except ExpectationFailed as exc:
            raise CommandError(str(exc), returncode=EXIT_REFUTED)
        except BudgetExceededError as exc:
            logger.warning("Бюджет исчерпан: %s", exc)
            raise CommandError(f"Бюджет исчерпан: {exc}", returncode=EXIT_BUDGET)
        except (AlgebraError, ValueError, OSError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

    def run(self, session: SessionConfig, **options):
        raise NotImplementedError

    def emit(self, session: SessionConfig, lines: Iterable[str], data: Any) -> None:
        """Текстовый вывод построчно или один JSON-документ"""
        if session.output_format == "json":
            self.stdout.write(json.dumps(data, ensure_ascii=False, indent=2))
        else:
            for line in lines:
                self.stdout.write(line)

    @staticmethod
    def check_expectation(actual: bool, expected):
        if expected is None:
            return
        if actual != (expected == "true"):
            raise ExpectationFailed(f"Ожидалось {expected}, получено {str(actual).lower()}")
