# apps/verification/views/report_viewset.py
from rest_framework import filters, permissions, viewsets
from django_filters import rest_framework as django_filters

from apps.verification.filters import ClaimReportFilter
from apps.verification.models import ClaimReport
from apps.verification.serializers import ClaimReportSerializer


class ClaimReportViewSet(viewsets.ReadOnlyModelViewSet):
    """
    API отчётов (только чтение).
    """
    queryset = ClaimReport.objects.select_related('run')
    serializer_class = ClaimReportSerializer
    permission_classes = [permissions.IsAuthenticated]
    filter_backends = [
        django_filters.DjangoFilterBackend,
        filters.SearchFilter,
        filters.OrderingFilter,
    ]
    filterset_class = ClaimReportFilter
    search_fields = ['claim', 'kind', 'order_text']
    ordering_fields = ['created_at', 'elapsed_ms', 'position']
    ordering = ['run', 'position']
