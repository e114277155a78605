from .run_serializers import ClaimReportSerializer, VerificationRunCreateSerializer, VerificationRunSerializer

__all__ = ["ClaimReportSerializer", "VerificationRunCreateSerializer", "VerificationRunSerializer"]
