# apps/verification/views/run_viewset.py
from rest_framework import filters, mixins, permissions, status, viewsets
from django_filters import rest_framework as django_filters
from rest_framework.decorators import action
from rest_framework.response import Response
from django.utils.translation import gettext_lazy as _
from drf_spectacular.utils import extend_schema

from apps.verification.filters import VerificationRunFilter
from apps.verification.models import VerificationRun
from apps.verification.serializers import (
    ClaimReportSerializer,
    VerificationRunCreateSerializer,
    VerificationRunSerializer,
)
from apps.verification.tasks import run_verification_task


class VerificationRunViewSet(
    mixins.CreateModelMixin,
    mixins.ListModelMixin,
    mixins.RetrieveModelMixin,
    viewsets.GenericViewSet,
):
    """
    API запусков проверок: создание запуска ставит задачу в очередь Celery.
    """
    queryset = VerificationRun.objects.all()
    permission_classes = [permissions.IsAuthenticated]
    filter_backends = [
        django_filters.DjangoFilterBackend,
        filters.SearchFilter,
        filters.OrderingFilter,
    ]
    filterset_class = VerificationRunFilter
    search_fields = ['claim', 'field_spec']
    ordering_fields = ['created_at', 'finished_at', 'status']
    ordering = ['-created_at']

    def get_serializer_class(self):
        if self.action == 'create':
            return VerificationRunCreateSerializer
        if self.action == 'reports':
            return ClaimReportSerializer
        return VerificationRunSerializer

    @extend_schema(
        request=VerificationRunCreateSerializer,
        responses={202: VerificationRunSerializer},
        description='Создать запуск и поставить его выполнение в очередь',
    )
    def create(self, request, *args, **kwargs):
        serializer = self.get_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        verification_run = serializer.save()
        task = run_verification_task.delay(verification_run.id)
        verification_run.refresh_from_db()

        return Response({
            'status': 'accepted',
            'message': _('Запуск поставлен в очередь'),
            'run_id': verification_run.id,
            'task_id': getattr(task, 'id', None),
            'run': VerificationRunSerializer(verification_run).data,
        }, status=status.HTTP_202_ACCEPTED)

    @extend_schema(responses={200: ClaimReportSerializer(many=True)})
    @action(detail=True, methods=['get'])
    def reports(self, request, pk=None):
        """Отчёты запуска в порядке экземпляров"""
        verification_run = self.get_object()
        queryset = verification_run.reports.order_by('position')
        page = self.paginate_queryset(queryset)
        if page is not None:
            return self.get_paginated_response(ClaimReportSerializer(page, many=True).data)
        return Response(ClaimReportSerializer(queryset, many=True).data)
