# apps/verification/serializers/run_serializers.py
from rest_framework import serializers

from apps.verification.models import ClaimReport, VerificationRun
from apps.verification.serializers.validation_mixins import RunValidationMixin


class ClaimReportSerializer(serializers.ModelSerializer):
    """Сериализатор для просмотра отчёта."""
    unexpected = serializers.BooleanField(read_only=True)

    class Meta:
        model = ClaimReport
        fields = [
            'id', 'run', 'position', 'claim', 'kind', 'params', 'status', 'expected_status',
            'stretch', 'unexpected', 'order_text', 'subchecks', 'witnesses', 'stats', 'notes',
            'elapsed_ms', 'created_at',
        ]
        read_only_fields = fields


class VerificationRunSerializer(serializers.ModelSerializer):
    """Сериализатор для просмотра запуска."""
    reports_count = serializers.IntegerField(source='reports.count', read_only=True)

    class Meta:
        model = VerificationRun
        fields = [
            'id', 'claim', 'params', 'max_n', 'field_spec', 'max_pairs', 'timeout', 'status',
            'summary', 'exit_code', 'reports_count', 'created_at', 'finished_at',
        ]
        read_only_fields = fields


class VerificationRunCreateSerializer(RunValidationMixin, serializers.ModelSerializer):
    """Сериализатор для создания запуска."""
    max_n = serializers.IntegerField(min_value=1, max_value=4, default=2)

    class Meta:
        model = VerificationRun
        fields = ['claim', 'params', 'max_n', 'field_spec', 'max_pairs', 'timeout']

    def validate(self, attrs):
        return self.validate_instance_params(attrs)
