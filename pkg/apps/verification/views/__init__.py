from .report_viewset import ClaimReportViewSet
from .run_viewset import VerificationRunViewSet

__all__ = ["ClaimReportViewSet", "VerificationRunViewSet"]
