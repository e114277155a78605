# apps/verification/management/commands/saturate.py
from apps.algebra.idealops import Ideal, saturate, saturate_iterated
from apps.verification.cli import AlgebraCommand
from apps.verification.cli.output import basis_data, basis_lines


class Command(AlgebraCommand):
    help = 'Насыщение идеала (по умолчанию <g_1, ..., g_m>) по многочлену'

    def add_command_arguments(self, parser):
        parser.add_argument('--by', required=True, help='многочлен, по которому насыщаем')
        parser.add_argument('--ideal', action='append')
        parser.add_argument('--method', choices=['elimination', 'iterated'], default='elimination')

    def run(self, session, **options):
        budget = session.budget()
        f = session.parse(options['by'])
        ideal = Ideal(session.ring, session.parse_many(options['ideal']) or session.generators())
        operation = saturate if options['method'] == 'elimination' else saturate_iterated
        basis = operation(ideal, f, budget).groebner(budget=budget)
        self.emit(session, basis_lines(basis), basis_data(basis))
