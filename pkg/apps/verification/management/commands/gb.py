# apps/verification/management/commands/gb.py
from apps.algebra.idealops import Ideal
from apps.verification.cli import AlgebraCommand
from apps.verification.cli.output import basis_data, basis_lines


class Command(AlgebraCommand):
    help = 'Приведённый базис Грёбнера идеала (по умолчанию <g_1, ..., g_m>)'

    def add_command_arguments(self, parser):
        parser.add_argument('--poly', action='append', help='образующая (можно повторять)')
        parser.add_argument('--file', help='файл с образующими и необязательной строкой порядка')
        parser.add_argument('--with-det', action='store_true', help='добавить det')
        parser.add_argument('--with-minors', action='store_true', help='добавить minor[i]')

    def run(self, session, **options):
        order = session.order
        generators = session.parse_many(options['poly'])
        if options['file']:
            document = session.read_document(options['file'])
            generators += document.polynomials
            order = document.order or order
        if not generators:
            generators = session.matrix.xy_entries()
        if options['with_det']:
            generators.append(session.matrix.determinant())
        if options['with_minors']:
            generators += session.matrix.row_deleted_minors()

        basis = Ideal(session.ring, generators).groebner(order, session.budget())
        self.emit(session, basis_lines(basis), basis_data(basis))
