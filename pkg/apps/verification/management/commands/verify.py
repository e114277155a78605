# apps/verification/management/commands/verify.py
from django.conf import settings
from django.core.management.base import CommandError

from apps.verification.cli import AlgebraCommand, ExpectationFailed
from apps.verification.cli.base import EXIT_USAGE
from apps.verification.cli.output import report_lines, summary_data, summary_table
from apps.verification.services import CheckOptions, ClaimId, Status, claim_from_text, instances_for, run
from apps.verification.services.persistence import save_summary
from apps.verification.services.runner import EXIT_BUDGET, EXIT_REFUTED


class Command(AlgebraCommand):
    help = 'Запускает проверку утверждений: одно (--claim) или весь набор (--all)'
    default_kind = None
    default_n = None

    def add_command_arguments(self, parser):
        target = parser.add_mutually_exclusive_group()
        target.add_argument('--claim', help=', '.join(c.value for c in ClaimId))
        target.add_argument('--all', action='store_true')
        parser.add_argument('--t', type=int, help='длина начального отрезка g_1..g_t')
        parser.add_argument('--k', type=int, help='степень идеала')
        parser.add_argument('--i', type=int, help='индекс y_i')
        parser.add_argument('--max-n', type=int, default=settings.VERIFY_DEFAULT_MAX_N)
        parser.add_argument('--jobs', type=int, default=settings.VERIFY_JOBS)
        parser.add_argument('--expect', choices=[s.value for s in Status])
        parser.add_argument('--save', action='store_true', help='сохранить запуск и отчёты в базе')
        parser.add_argument('--no-timing', action='store_true', help='не выводить поля времени')

    def run(self, session, **options):
        if not options['claim'] and not options['all']:
            raise CommandError('Укажите --claim или --all', returncode=EXIT_USAGE)
        if options['order']:
            raise CommandError(
                '--order не применяется: каждая проверка строит свой порядок и пишет его в отчёт',
                returncode=EXIT_USAGE,
            )
        claim = claim_from_text(options['claim']) if options['claim'] else None
        params = {name: options[name] for name in ('kind', 'm', 'n', 't', 'k', 'i')}
        expected = Status(options['expect']) if options['expect'] else None
        instances = instances_for(claim, max_n=options['max_n'], expected=expected, **params)

        check_options = CheckOptions(
            field_spec=session.field.spec,
            max_pairs=session.max_pairs,
            max_terms=session.max_terms,
            timeout=options['timeout'] or settings.VERIFY_TIMEOUT_SECONDS,
        )
        summary = run(instances, check_options, options['jobs'])

        if options['save']:
            saved = save_summary(
                summary,
                claim=claim.value if claim else '',
                params=dict(instances[0].params) if claim and len(instances) == 1 else {},
                max_n=options['max_n'],
                field_spec=check_options.field_spec,
                max_pairs=check_options.max_pairs,
                timeout=check_options.timeout,
            )
            self.stderr.write(f'Запуск сохранён: #{saved.pk}')

        include_timing = not options['no_timing']
        lines = []
        for report in summary.reports:
            lines += report_lines(report)
        lines += summary_table(summary.reports, include_timing)
        lines.append(summary.line())
        self.emit(session, lines, summary_data(summary, include_timing))

        if summary.exit_code == EXIT_REFUTED:
            raise ExpectationFailed(summary.line())
        if summary.exit_code == EXIT_BUDGET:
            raise CommandError(f'Бюджет исчерпан: {summary.line()}', returncode=EXIT_BUDGET)
