# apps/verification/management/commands/construct.py
from apps.verification.cli import AlgebraCommand


class Command(AlgebraCommand):
    help = 'Строит матрицу X, вектор Y и многочлены g_i = (XY)_i, det, миноры'

    def add_command_arguments(self, parser):
        parser.add_argument('--show-matrix', action='store_true')
        parser.add_argument('--show-g', action='store_true')
        parser.add_argument('--show-det', action='store_true')
        parser.add_argument('--show-minors', action='store_true')
        parser.add_argument('--show-order', action='store_true')

    def run(self, session, **options):
        matrix = session.matrix
        show_any = any(options[key] for key in ('show_matrix', 'show_g', 'show_det', 'show_minors', 'show_order'))
        lines, data = [repr(session.ring)], {'ring': repr(session.ring)}

        if options['show_matrix']:
            lines.append(matrix.to_text())
            data['matrix'] = [[e.to_text() for e in row] for row in matrix.rows()]
        if options['show_g'] or not show_any:
            g = [f'g[{i}] = {p.to_text(session.order)}' for i, p in enumerate(matrix.xy_entries(), start=1)]
            lines += g
            data['g'] = [p.to_text(session.order) for p in matrix.xy_entries()]
        if options['show_det']:
            det = matrix.determinant().to_text(session.order)
            lines.append(f'det = {det}')
            data['det'] = det
        if options['show_minors']:
            minors = [p.to_text(session.order) for p in matrix.row_deleted_minors()]
            lines += [f'minor[{i}] = {text}' for i, text in enumerate(minors, start=1)]
            data['minors'] = minors
        if options['show_order']:
            lines.append(session.order.to_text())
            data['order'] = session.order.to_text()
        self.emit(session, lines, data)
