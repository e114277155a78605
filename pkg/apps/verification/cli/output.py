from typing import List, Sequence

from apps.algebra.groebner import GroebnerBasis
from apps.verification.services import Report
from apps.verification.services.runner import Summary


def basis_data(basis: GroebnerBasis) -> dict:
    return {
        "order": basis.order.to_text(),
        "basis": basis.to_text(),
        "stats": basis.stats.to_dict(),
    }


def basis_lines(basis: GroebnerBasis) -> List[str]:
    lines = [basis.order.to_text()]
    lines += [f"  {text}" for text in basis.to_text()]
    stats = ", ".join(f"{k}={v}" for k, v in basis.stats.to_dict().items())
    lines.append(f"# {stats}")
    return lines


def report_lines(report: Report) -> List[str]:
    lines = [f"{report.label}: {report.status.label}"]
    if report.order:
        lines.append(f"  {report.order}")
    for subcheck in report.subchecks:
        mark = "ok" if subcheck.passed else "FAIL"
        detail = f" ({subcheck.detail})" if subcheck.detail else ""
        lines.append(f"  [{mark}] {subcheck.name}{detail}")
    for name, value in report.witnesses.items():
        lines.append(f"  {name}: {value}")
    lines += [f"  # {note}" for note in report.notes]
    return lines


def summary_table(reports: Sequence[Report], include_timing: bool = True) -> List[str]:
    width = max((len(r.label) for r in reports), default=10)
    lines = [f"{'instance'.ljust(width)}  {'status':<32} {'expected':<20}" + (" ms" if include_timing else "")]
    for report in reports:
        expected = report.expected.value if report.expected else "-"
        row = f"{report.label.ljust(width)}  {report.status.label:<32} {expected:<20}"
        if include_timing:
            row += f" {report.elapsed_ms}"
        lines.append(row + (" !" if report.unexpected else ""))
    return lines


def summary_data(summary: Summary, include_timing: bool = True) -> dict:
    return {
        "reports": [r.to_dict(include_timing) for r in summary.reports],
        "summary": summary.to_dict(include_timing),
    }
