"""Report containers shared by the audit functions and the suite runner."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one audit: pass/fail plus reproducible witnesses.

    ``failures`` are violations of asserted facts; ``findings`` are
    observed grid-truncation deviations that are logged, not failed;
    ``notes`` carry context (active hypotheses, degenerate cases).
    """

    name: str
    checked: int
    failures: tuple[str, ...] = ()
    findings: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        extra = f", findings={len(self.findings)}" if self.findings else ""
        return f"{self.name}: {state} ({self.checked} checks{extra})"


@dataclass
class SuiteReport:
    """Aggregated result of a named verification sweep."""

    suite: str
    config: dict
    instances: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    def absorb(self, report: CheckReport, instance: str | None = None) -> None:
        prefix = f"[{instance}] " if instance else ""
        self.instances += 1
        self.checks += report.checked
        self.failures.extend(prefix + f for f in report.failures)
        self.findings.extend(prefix + f for f in report.findings)
        self.notes.extend(prefix + n for n in report.notes)

    @property
    def passed(self) -> bool:
        return not self.failures

    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.findings:
            return 2
        return 0


def render_json(report: SuiteReport) -> str:
    """Machine-diffable rendering; `elapsed_s` is the only timing field."""
    payload = {
        "suite": report.suite,
        "config": report.config,
        "instances": report.instances,
        "checks": report.checks,
        "failures": report.failures,
        "findings": report.findings,
        "notes": report.notes,
        "elapsed_s": round(report.elapsed_s, 3),
    }
    return json.dumps(payload, indent=2, sort_keys=False)


def render_table(report: SuiteReport) -> str:
    lines = [
        f"suite: {report.suite}",
        "config: " + " ".join(f"{k}={v}" for k, v in sorted(report.config.items())),
        f"instances: {report.instances}",
        f"checks: {report.checks}",
        f"failures: {len(report.failures)}",
        f"findings: {len(report.findings)}",
        f"status: {'pass' if report.passed else 'FAIL'}",
    ]
    if report.failures:
        lines.append("-- failure witnesses --")
        lines.extend("  " + f for f in report.failures)
    if report.findings:
        lines.append("-- findings --")
        lines.extend("  " + f for f in report.findings)
    if report.notes:
        lines.append("-- notes --")
        lines.extend("  " + n for n in report.notes)
    lines.append(f"time: {report.elapsed_s:.3f}s")
    return "\n".join(lines)


def emit_report(report: SuiteReport, format: str = "table") -> str:
    if format == "json":
        return render_json(report)
    if format == "table":
        return render_table(report)
    raise ValueError(f"unknown report format {format!r}")


def strip_timing(text: str) -> str:
    """Drop timing fields so re-runs can be compared byte-for-byte."""
    kept = [
        line
        for line in text.splitlines()
        if not line.startswith("time:") and '"elapsed_s"' not in line
    ]
    return "\n".join(kept)
