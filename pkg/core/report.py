"""Rendering of verification reports as JSON, CSV or a markdown summary.

No CLI dependencies; used by ``symbreak verify`` and
scripts/run_all_verifications.py.
"""

from __future__ import annotations

import csv
import io
import json

from core.models import VerificationReport

CSV_COLUMNS = ["theorem_id", "max_n", "row", "instance", "check", "graph6", "cover", "observed"]


def render_json(report: VerificationReport, include_timing: bool = False) -> str:
    """Indented JSON in field order; identical reports give identical text
    unless timing is included."""
    exclude = None if include_timing else {"elapsed_seconds"}
    return json.dumps(report.model_dump(mode="json", exclude=exclude), indent=2) + "\n"


def render_csv(report: VerificationReport, include_timing: bool = False) -> str:
    """One row per violation, then a summary row with the verdict."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    columns = CSV_COLUMNS + (["elapsed_seconds"] if include_timing else [])
    writer.writerow(columns)
    for v in report.violations:
        writer.writerow(
            [
                report.theorem_id,
                report.max_n,
                "violation",
                v.instance,
                v.check,
                v.graph6,
                (v.cover or "").strip().replace("\n", ";"),
                json.dumps(v.observed, sort_keys=True),
            ]
        )
    summary = [
        report.theorem_id,
        report.max_n,
        "summary",
        report.instances_scanned,
        report.verdict,
        "",
        "",
        json.dumps({"violations": len(report.violations), "findings": len(report.findings)}),
    ]
    if include_timing:
        summary.append(report.elapsed_seconds)
    writer.writerow(summary)
    return buf.getvalue()


def render_text(
    report: VerificationReport, include_timing: bool = False, max_rows: int = 20
) -> str:
    """Markdown summary: headline numbers, violation witnesses, findings."""
    lines: list[str] = []

    lines.append(f"# Verification: {report.theorem_id}")
    lines.append("")
    lines.append(f"- **Verdict**: {report.verdict.upper()}")
    lines.append(f"- **Max order**: {report.max_n}")
    lines.append(f"- **Instances scanned**: {report.instances_scanned:,}")
    lines.append(f"- **Violations**: {len(report.violations)}")
    lines.append(f"- **Findings**: {len(report.findings)}")
    if include_timing:
        lines.append(f"- **Elapsed**: {report.elapsed_seconds:.2f}s")
    lines.append("")

    if report.violations:
        lines.append("## Violations")
        lines.append("")
        lines.append("| # | Check | graph6 | Cover | Observed |")
        lines.append("|---|-------|--------|-------|----------|")
        for v in report.violations[:max_rows]:
            cover = (v.cover or "").strip().replace("\n", " / ")
            observed = ", ".join(f"{k}={val}" for k, val in v.observed.items())
            lines.append(f"| {v.instance} | {v.check} | `{v.graph6}` | {cover} | {observed} |")
        if len(report.violations) > max_rows:
            lines.append("")
            lines.append(f"*{len(report.violations) - max_rows} more not shown*")
        lines.append("")

    if report.findings:
        lines.append("## Findings (informational)")
        lines.append("")
        for f in report.findings:
            where = f" `{f.graph6}`" if f.graph6 else ""
            detail = ", ".join(f"{k}={val}" for k, val in f.detail.items())
            lines.append(f"- **{f.topic}**{where}: {detail}")
        lines.append("")

    return "\n".join(lines)


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def render(report: VerificationReport, fmt: str = "json", include_timing: bool = False) -> str:
    """Dispatch on fmt (json, csv or text).

    Raises:
        ValueError: If fmt is not a known format.
    """
    if fmt not in RENDERERS:
        raise ValueError(f"Unknown format {fmt!r}. Available: {', '.join(RENDERERS)}")
    return RENDERERS[fmt](report, include_timing=include_timing)
