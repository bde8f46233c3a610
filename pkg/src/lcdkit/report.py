"""Record building and rendering for search tables and claim reports.

Structured output is line-delimited JSON: one record per line, every record
carrying a "version" field and a "record" tag, keys sorted so that equal
runs produce byte-identical streams.  Timing fields can be omitted (they
are the only nondeterministic part of a record) to make reruns comparable
byte for byte.  Human-readable rendering of the same data lives alongside,
so both views always agree on content.
"""

from __future__ import annotations

import json

from .matrix import MatGF
from .search import LcdTableEntry, MonotonicityViolation, SkippedCell
from .verify import ClaimResult, VerifyReport

FORMAT_VERSION = 1


def encode(record: dict) -> str:
    """One JSON line, keys sorted for byte-stable output."""
    return json.dumps(record, sort_keys=True)


def witness_lines(mat: MatGF) -> list[str]:
    """Matrix body lines ("1 0 1" per row), same shape as the file format."""
    return [" ".join(str(int(x)) for x in row) for row in mat.arr]


def cell_record(entry: LcdTableEntry, include_timing: bool = True) -> dict:
    rec = {
        "version": FORMAT_VERSION,
        "record": "table-cell",
        "n": entry.n,
        "k": entry.k,
        "q": entry.q,
        "d_lcd": entry.d_lcd,
        "method": entry.method,
        "witness_rows": None if entry.witness is None else witness_lines(entry.witness),
        "explored_count": entry.explored_count,
    }
    if include_timing:
        rec["elapsed_ms"] = round(entry.elapsed_ms, 3)
    if entry.seed is not None:
        rec["seed"] = entry.seed
    return rec


def skipped_record(cell: SkippedCell) -> dict:
    return {
        "version": FORMAT_VERSION,
        "record": "skipped-cell",
        "n": cell.n,
        "k": cell.k,
        "q": cell.q,
        "reason": cell.reason,
    }


def violation_record(v: MonotonicityViolation) -> dict:
    return {
        "version": FORMAT_VERSION,
        "record": "monotonicity-violation",
        "k": v.k,
        "q": v.q,
        "n": v.n,
        "d_at_n": v.d_at_n,
        "d_at_next": v.d_at_next,
    }


def claim_record(result: ClaimResult) -> dict:
    return {
        "version": FORMAT_VERSION,
        "record": "claim",
        "claim_id": result.claim.claim_id,
        "kind": result.claim.kind,
        "statement": result.claim.statement,
        "hypothesis": result.claim.hypothesis_text,
        "predicted": result.claim.predicted,
        "stated_form": result.claim.stated_form,
        "verdict": result.verdict,
        "points": [
            {
                "point": dict(pr.point),
                "verdict": pr.verdict,
                "evidence": pr.evidence,
                "note": pr.note,
            }
            for pr in result.points
        ],
    }


def summary_record(report: VerifyReport) -> dict:
    return {
        "version": FORMAT_VERSION,
        "record": "verify-summary",
        "summary": dict(report.summary),
        "seed": report.seed,
        "budget": report.budget,
    }


def metrics_record(metrics) -> dict:
    rec = {"version": FORMAT_VERSION, "record": "metrics"}
    rec.update(metrics.as_dict())
    rec["weight_distribution"] = list(rec["weight_distribution"])
    return rec


# ---- human-readable views ----------------------------------------------------------


def render_cell_text(entry, include_timing: bool = True) -> str:
    if isinstance(entry, SkippedCell):
        return f"n={entry.n} k={entry.k} q={entry.q}  skipped ({entry.reason})"
    parts = [
        f"n={entry.n} k={entry.k} q={entry.q}",
        f"d_lcd={entry.d_lcd}",
        f"method={entry.method}",
        f"explored={entry.explored_count}",
    ]
    if include_timing:
        parts.append(f"elapsed_ms={entry.elapsed_ms:.1f}")
    if entry.seed is not None:
        parts.append(f"seed={entry.seed}")
    return "  ".join(parts)


def render_table_text(table, include_timing: bool = True,
                      violations: list | None = None) -> str:
    lines = [render_cell_text(e, include_timing) for e in table]
    if violations is not None:
        if violations:
            for v in violations:
                lines.append(
                    f"monotonicity violation: k={v.k} q={v.q} "
                    f"d({v.n + 1})={v.d_at_next} < d({v.n})={v.d_at_n}")
        else:
            lines.append("monotonicity: no violations")
    return "\n".join(lines)


def _point_label(point: dict) -> str:
    return " ".join(f"{key}={point[key]}" for key in ("n", "k", "q", "m")
                    if point.get(key) is not None)


def _shorten(evidence: dict) -> str:
    keep = []
    for key, value in evidence.items():
        if key in ("witness_rows", "gram", "generator"):
            continue
        keep.append(f"{key}={value}")
    return ", ".join(keep)


def render_verify_text(report: VerifyReport) -> str:
    lines = []
    for result in report.results:
        lines.append(f"{result.claim.claim_id}: {result.verdict}")
        lines.append(f"  claim: {result.claim.statement}")
        if result.claim.stated_form:
            lines.append(f"  as stated: {result.claim.stated_form}")
        for pr in result.points:
            label = _point_label(pr.point) or "(all sampled points)"
            lines.append(f"  [{pr.verdict}] {label}: {_shorten(pr.evidence)}")
            if pr.note:
                lines.append(f"      note: {pr.note}")
        lines.append("")
    s = report.summary
    lines.append(
        f"claims: {s['total']}  confirmed: {s['confirmed']}  "
        f"refuted: {s['refuted']}  out_of_budget: {s['out_of_budget']}")
    lines.append(f"seed: {report.seed}  budget: {report.budget}")
    return "\n".join(lines)
