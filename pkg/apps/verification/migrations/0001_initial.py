import django.db.models.deletion
from django.db import migrations, models


CLAIMS = [
    ('regular-sequence', 'regular-sequence'),
    ('saturated', 'saturated'),
    ('gb-structure', 'gb-structure'),
    ('quotient-stability', 'quotient-stability'),
    ('decomposition-square', 'decomposition-square'),
    ('decomposition-rect', 'decomposition-rect'),
    ('nonprime-witness', 'nonprime-witness'),
    ('torsionfree', 'torsionfree'),
    ('cofactor-identity', 'cofactor-identity'),
    ('skew-relation', 'skew-relation'),
    ('primality', 'primality'),
]

STATUSES = [
    ('verified', 'verified'),
    ('refuted', 'refuted'),
    ('paper-cited', 'paper-cited'),
    ('budget-exceeded', 'budget-exceeded'),
    ('verified-necessary', 'verified (necessary conditions)'),
]


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Дата создания')),
                ('updated_at', models.DateTimeField(auto_now=True, verbose_name='Дата обновления')),
                ('claim', models.CharField(blank=True, choices=CLAIMS, default='', max_length=40, verbose_name='Утверждение')),
                ('params', models.JSONField(blank=True, default=dict, verbose_name='Параметры экземпляра')),
                ('max_n', models.PositiveSmallIntegerField(default=2, verbose_name='Максимальное n')),
                ('field_spec', models.CharField(default='rationals', max_length=40, verbose_name='Поле коэффициентов')),
                ('max_pairs', models.PositiveIntegerField(blank=True, null=True, verbose_name='Лимит пар')),
                ('timeout', models.FloatField(blank=True, null=True, verbose_name='Лимит времени на экземпляр, с')),
                ('status', models.CharField(choices=[('pending', 'Ожидает запуска'), ('running', 'Выполняется'), ('passed', 'Пройден'), ('failed', 'Есть неожиданные результаты')], default='pending', max_length=20, verbose_name='Статус')),
                ('summary', models.JSONField(blank=True, default=dict, verbose_name='Сводка')),
                ('exit_code', models.SmallIntegerField(blank=True, null=True, verbose_name='Код завершения')),
                ('finished_at', models.DateTimeField(blank=True, null=True, verbose_name='Время завершения')),
            ],
            options={
                'verbose_name': 'Запуск проверки',
                'verbose_name_plural': 'Запуски проверок',
                'ordering': ['-created_at'],
                'indexes': [
                    models.Index(fields=['status'], name='verif_run_status_idx'),
                    models.Index(fields=['claim'], name='verif_run_claim_idx'),
                ],
            },
        ),
        migrations.CreateModel(
            name='ClaimReport',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Дата создания')),
                ('updated_at', models.DateTimeField(auto_now=True, verbose_name='Дата обновления')),
                ('position', models.PositiveIntegerField(verbose_name='Позиция в запуске')),
                ('claim', models.CharField(choices=CLAIMS, max_length=40, verbose_name='Утверждение')),
                ('kind', models.CharField(blank=True, default='', max_length=20, verbose_name='Тип матрицы')),
                ('params', models.JSONField(default=dict, verbose_name='Параметры')),
                ('status', models.CharField(choices=STATUSES, max_length=30, verbose_name='Статус')),
                ('expected_status', models.CharField(blank=True, choices=STATUSES, default='', max_length=30, verbose_name='Ожидаемый статус')),
                ('stretch', models.BooleanField(default=False, verbose_name='Расширенный экземпляр')),
                ('order_text', models.TextField(blank=True, default='', verbose_name='Мономиальный порядок')),
                ('subchecks', models.JSONField(default=list, verbose_name='Подпроверки')),
                ('witnesses', models.JSONField(default=dict, verbose_name='Свидетельства')),
                ('stats', models.JSONField(default=dict, verbose_name='Статистика базисов')),
                ('notes', models.JSONField(default=list, verbose_name='Примечания')),
                ('elapsed_ms', models.PositiveIntegerField(default=0, verbose_name='Время, мс')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='reports', to='verification.verificationrun', verbose_name='Запуск')),
            ],
            options={
                'verbose_name': 'Отчёт о проверке',
                'verbose_name_plural': 'Отчёты о проверках',
                'ordering': ['run', 'position'],
                'indexes': [models.Index(fields=['claim', 'status'], name='verif_report_claim_status_idx')],
                'constraints': [models.UniqueConstraint(fields=('run', 'position'), name='unique_report_position')],
            },
        ),
    ]
