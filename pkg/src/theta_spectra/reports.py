"""Verification reports and their JSON/CSV serialisation."""
from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exactpoly import IntPoly

STATUSES = ("exact-pass", "numeric-pass", "fail", "informational")


@dataclass
class PointResult:
    params: dict[str, Any]
    status: str
    detail: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class VerificationReport:
    claim: str
    points: list[PointResult] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    table: list[dict[str, Any]] = field(default_factory=list)
    wall_time: float = 0.0
    timestamp: str = ""

    def add(self, params: dict[str, Any], status: str, **detail: Any) -> PointResult:
        pt = PointResult(params, status, detail)
        self.points.append(pt)
        return pt

    @property
    def totals(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for p in self.points:
            out[p.status] += 1
        return out

    @property
    def passed(self) -> bool:
        return not any(p.status == "fail" for p in self.points)

    def failures(self) -> list[PointResult]:
        return [p for p in self.points if p.status == "fail"]

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "passed": self.passed,
            "totals": self.totals,
            "points": [{"params": to_plain(p.params), "status": p.status, "detail": to_plain(p.detail)}
                       for p in self.points],
            "notes": list(self.notes),
            "table": to_plain(self.table),
            "meta": {"wall_time": f"{self.wall_time:.3f}", "timestamp": self.timestamp},
        }


class timed:
    """Context manager filling ``wall_time`` and ``timestamp`` of a report."""

    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self) -> VerificationReport:
        self.report.timestamp = time.strftime("%Y-%m-%dT%H:%M:%S%z")
        self._t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc) -> None:
        self.report.wall_time = time.perf_counter() - self._t0


def to_plain(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return float(f"{obj:.15g}")
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, IntPoly):
        return [str(c) for c in obj.coefficients]
    if isinstance(obj, bytes):
        return obj.decode("ascii")
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return to_plain(obj.item())
    return str(obj)


def report_json(report: VerificationReport, include_meta: bool = True) -> str:
    data = report.to_dict()
    if not include_meta:
        data.pop("meta")
    return json.dumps(data, indent=2) + "\n"


def write_report(report: VerificationReport, json_path: str | Path,
                 csv_path: str | Path | None = None) -> None:
    json_path = Path(json_path)
    try:
        json_path.write_text(report_json(report))
        if csv_path is not None and report.table:
            with open(csv_path, "w", newline="") as fh:
                cols = list(report.table[0])
                w = csv.DictWriter(fh, fieldnames=cols, lineterminator="\n")
                w.writeheader()
                for row in report.table:
                    w.writerow({c: _csv_cell(row[c]) for c in cols})
    except OSError as exc:
        raise OSError(f"cannot write report to {exc.filename or json_path}: {exc.strerror}") from exc


def _csv_cell(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.15g}"
    if isinstance(v, bytes):
        return v.decode("ascii")
    return str(v)
