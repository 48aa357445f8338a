#!/usr/bin/env python3
"""Run every theorem scan at its acceptance size and write JSON reports.

    python scripts/run_all_verifications.py [out_dir] [jobs]

Writes <out_dir>/<theorem-id>.json (default out_dir: reports/) and prints
one summary line per suite.  Expect tens of minutes with one job.
"""
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.harness import run_suite
from core.report import render_json

ACCEPTANCE_MAX_N = {
    "thm-2-3": 6,
    "thm-2-5": 5,
    "delta-bounds": 6,
    "tree-theorems": 9,
    "graphoidal": 5,
    "constructions": 5,
    "line-recognition": 7,
}

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("reports")
jobs = int(sys.argv[2]) if len(sys.argv) > 2 else 1
out_dir.mkdir(parents=True, exist_ok=True)

failed = []
for theorem_id, max_n in ACCEPTANCE_MAX_N.items():
    report = run_suite(theorem_id, max_n=max_n, jobs=jobs)
    (out_dir / f"{theorem_id}.json").write_text(render_json(report, include_timing=True))
    print(
        f"{theorem_id:<18} max_n={max_n}  {report.verdict.upper():<4}  "
        f"{report.instances_scanned:>7,} instances  {len(report.violations)} violations  "
        f"{len(report.findings)} findings  {report.elapsed_seconds:.1f}s"
    )
    if report.verdict != "pass":
        failed.append(theorem_id)

if failed:
    print(f"Violations in: {', '.join(failed)}")
    sys.exit(2)
