# apps/verification/management/commands/member.py
from apps.algebra.idealops import Ideal, member
from apps.verification.cli import AlgebraCommand


class Command(AlgebraCommand):
    help = 'Проверяет принадлежность многочлена идеалу (по умолчанию I_1(XY))'

    def add_command_arguments(self, parser):
        parser.add_argument('--poly', required=True)
        parser.add_argument('--ideal', action='append', help='образующая идеала (можно повторять)')
        parser.add_argument('--with-det', action='store_true')
        parser.add_argument('--expect', choices=['true', 'false'])

    def run(self, session, **options):
        p = session.parse(options['poly'])
        generators = session.parse_many(options['ideal']) or session.generators()
        if options['with_det']:
            generators.append(session.matrix.determinant())

        result = member(p, Ideal(session.ring, generators), session.budget(), session.order)
        self.emit(session, [str(result).lower()], {'poly': p.to_text(), 'member': result})
        self.check_expectation(result, options['expect'])
