# apps/verification/filters.py
import django_filters
from django_filters import rest_framework as filters
from .models import ClaimReport, VerificationRun


class VerificationRunFilter(filters.FilterSet):
    claim = django_filters.ChoiceFilter(choices=VerificationRun.CLAIM_CHOICES)
    status = django_filters.ChoiceFilter(choices=VerificationRun.STATUS_CHOICES)
    field_spec = django_filters.CharFilter(lookup_expr='iexact')
    created_after = django_filters.DateFilter(field_name='created_at', lookup_expr='gte')
    created_before = django_filters.DateFilter(field_name='created_at', lookup_expr='lte')

    class Meta:
        model = VerificationRun
        fields = ['claim', 'status', 'field_spec']


class ClaimReportFilter(filters.FilterSet):
    claim = django_filters.ChoiceFilter(choices=ClaimReport.CLAIM_CHOICES)
    status = django_filters.ChoiceFilter(choices=ClaimReport.STATUS_CHOICES)
    kind = django_filters.CharFilter(lookup_expr='exact')
    run = django_filters.NumberFilter(field_name='run_id')
    stretch = django_filters.BooleanFilter()

    class Meta:
        model = ClaimReport
        fields = ['claim', 'status', 'kind', 'run', 'stretch']
