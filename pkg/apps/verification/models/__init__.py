from .verification_run import VerificationRun
from .claim_report import ClaimReport

__all__ = ["VerificationRun", "ClaimReport"]
