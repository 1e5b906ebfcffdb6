"""Check results and verification reports with deterministic serialization.

The canonical JSON form deliberately excludes wall-clock timings so that two
runs with identical configuration produce byte-identical files; timings are
available in the human-readable text rendering.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


def _jsonable(value: Any) -> Any:
    """Deterministic JSON encoding; complex values become 'a+bj' strings."""
    if isinstance(value, complex):
        return repr(value)
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return repr(value)


@dataclass
class CheckResult:
    """Outcome of one named identity check at one parameter point."""

    check_id: str
    params: dict
    max_abs_error: float
    tolerance: float
    passed: bool
    wall_time_s: float = 0.0
    info: dict = field(default_factory=dict)

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "check_id": self.check_id,
            "params": _jsonable(self.params),
            "max_abs_error": float(self.max_abs_error),
            "tolerance": float(self.tolerance),
            "pass": bool(self.passed),
        }
        if self.info:
            d["info"] = _jsonable(self.info)
        if include_timing:
            d["wall_time_s"] = self.wall_time_s
        return d


@dataclass
class VerificationReport:
    """A named suite of checks plus the configuration that produced it."""

    suite: str
    checks: list[CheckResult]
    config: dict = field(default_factory=dict)
    tool_version: str = ""

    @property
    def aggregate_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_error(self) -> float:
        return max((c.max_abs_error for c in self.checks), default=0.0)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "tool_version": self.tool_version,
            "config": _jsonable(self.config),
            "checks": [c.to_dict() for c in self.checks],
            "aggregate_pass": self.aggregate_pass,
        }

    def to_json_bytes(self) -> bytes:
        text = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return (text + "\n").encode("ascii")

    def to_csv_text(self) -> str:
        lines = ["suite,check_id,max_abs_error,tolerance,pass,params"]
        for c in self.checks:
            params = ";".join(
                f"{k}={_jsonable(v)}" for k, v in sorted(c.params.items())
            )
            lines.append(
                f"{self.suite},{c.check_id},{c.max_abs_error!r},"
                f"{c.tolerance!r},{int(c.passed)},{params}"
            )
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.aggregate_pass else 'FAIL'}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            lines.append(
                f"  [{status}] {c.check_id:<28} max_err={c.max_abs_error:.3e} "
                f"tol={c.tolerance:.1e} ({c.wall_time_s * 1e3:.1f} ms)"
            )
        return "\n".join(lines) + "\n"


def merge_reports(
    reports: list[VerificationReport], suite: str = "all"
) -> VerificationReport:
    checks: list[CheckResult] = []
    config: dict = {}
    version = ""
    for r in reports:
        checks.extend(r.checks)
        config[r.suite] = r.config
        version = r.tool_version or version
    return VerificationReport(suite, checks, config, version)
