# apps/verification/admin.py
from django.contrib import admin
from django.utils.translation import gettext_lazy as _
from config.admin import admin_site
from .models import ClaimReport, VerificationRun


class ClaimReportInline(admin.TabularInline):
    model = ClaimReport
    extra = 0
    can_delete = False
    fields = ['position', 'claim', 'params', 'status', 'expected_status', 'stretch', 'elapsed_ms']
    readonly_fields = fields


@admin.register(VerificationRun, site=admin_site)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ['id', 'claim', 'max_n', 'field_spec', 'status', 'exit_code', 'created_at', 'finished_at']
    list_filter = [
        'status',
        'claim',
        ('created_at', admin.DateFieldListFilter),
    ]
    search_fields = ['claim', 'field_spec']
    readonly_fields = ['status', 'summary', 'exit_code', 'created_at', 'updated_at', 'finished_at']
    inlines = [ClaimReportInline]

    fieldsets = (
        (None, {
            'fields': ('claim', 'params', 'status')
        }),
        (_('Параметры запуска'), {
            'fields': ('max_n', 'field_spec', 'max_pairs', 'timeout')
        }),
        (_('Результат'), {
            'fields': ('summary', 'exit_code', 'finished_at'),
        }),
        (_('Даты'), {
            'fields': ('created_at', 'updated_at'),
            'classes': ('collapse',)
        }),
    )


@admin.register(ClaimReport, site=admin_site)
class ClaimReportAdmin(admin.ModelAdmin):
    list_display = ['id', 'run', 'position', 'claim', 'kind', 'status', 'expected_status', 'elapsed_ms']
    list_filter = ['claim', 'status', 'kind', 'stretch']
    search_fields = ['claim', 'order_text']
    list_select_related = ['run']
    readonly_fields = [
        'run', 'position', 'claim', 'kind', 'params', 'status', 'expected_status', 'stretch',
        'order_text', 'subchecks', 'witnesses', 'stats', 'notes', 'elapsed_ms', 'created_at', 'updated_at',
    ]

    fieldsets = (
        (None, {
            'fields': ('run', 'position', 'claim', 'kind', 'params', 'status', 'expected_status', 'stretch')
        }),
        (_('Доказательная часть'), {
            'fields': ('order_text', 'subchecks', 'witnesses', 'notes')
        }),
        (_('Статистика'), {
            'fields': ('stats', 'elapsed_ms'),
            'classes': ('collapse',)
        }),
    )
