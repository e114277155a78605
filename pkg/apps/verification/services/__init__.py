from .harness import CheckOptions, guarded
from .registry import CHECKS, Instance, claim_from_text, default_grid, instances_for, make_instance, validate_instance
from .report import ClaimId, Report, Status, SubCheck
from .runner import Summary, run, run_instance, run_instances

__all__ = [
    "CHECKS",
    "CheckOptions",
    "ClaimId",
    "Instance",
    "Report",
    "Status",
    "SubCheck",
    "Summary",
    "claim_from_text",
    "default_grid",
    "guarded",
    "instances_for",
    "make_instance",
    "run",
    "run_instance",
    "run_instances",
    "validate_instance",
]
