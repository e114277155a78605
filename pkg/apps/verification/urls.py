# apps/verification/urls.py
from rest_framework.routers import DefaultRouter
from django.urls import path
from .views import ClaimReportViewSet, VerificationRunViewSet
from rest_framework.decorators import api_view
from rest_framework.response import Response
from drf_spectacular.utils import extend_schema

router = DefaultRouter()
router.register(r'runs', VerificationRunViewSet, basename='run')
router.register(r'reports', ClaimReportViewSet, basename='report')

@extend_schema(
    operation_id='api_root',
    description='Корневой эндпоинт API, возвращает список доступных эндпоинтов',
    responses={200: {'type': 'object', 'additionalProperties': True}},
)
@api_view(['GET'])
def api_root(request):
    return Response({
        'runs': request.build_absolute_uri('runs/'),
        'reports': request.build_absolute_uri('reports/'),
        'docs': request.build_absolute_uri('docs/'),
    })

urlpatterns = [
    path('', api_root, name='api-root'),
] + router.urls
