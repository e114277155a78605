# apps/verification/management/commands/intersect.py
from apps.algebra.idealops import Ideal, intersect
from apps.verification.cli import AlgebraCommand
from apps.verification.cli.output import basis_data, basis_lines


class Command(AlgebraCommand):
    help = 'Пересечение двух идеалов методом исключения переменной'

    def add_command_arguments(self, parser):
        parser.add_argument('--left', action='append', required=True)
        parser.add_argument('--right', action='append', required=True)

    def run(self, session, **options):
        budget = session.budget()
        left = Ideal(session.ring, session.parse_many(options['left']))
        right = Ideal(session.ring, session.parse_many(options['right']))
        basis = intersect(left, right, budget).groebner(budget=budget)
        self.emit(session, basis_lines(basis), basis_data(basis))
