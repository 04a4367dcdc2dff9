"""JSON report for a verified construction."""

from __future__ import annotations

import json
from typing import Mapping

from .verify import VerificationReport

__all__ = ["emit_report", "report_dict"]


def report_dict(report: VerificationReport, metrics: Mapping[str, int]) -> dict[str, bool | int]:
    """Flatten verifier flags, metrics and the overall status into one mapping.

    Only booleans and integers survive; diagnostics stay out of the report.
    """
    out: dict[str, bool | int] = {}
    for key, value in metrics.items():
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"metric {key!r} must be an integer, got {value!r}")
        out[key] = value
    for key, flag in report.flags().items():
        out[key] = bool(flag)
    out["passed"] = report.passed
    return out


def emit_report(report: VerificationReport, metrics: Mapping[str, int]) -> str:
    """Serialise :func:`report_dict` with sorted keys and a trailing newline."""
    return json.dumps(report_dict(report, metrics), sort_keys=True, indent=2) + "\n"
