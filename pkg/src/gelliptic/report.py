"""Pass/fail reports returned by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    value: Any = None
    expected: Any = None
    error: float | None = None
    tol: float | None = None
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        parts = [f"[{status}] {self.name}"]
        if self.error is not None and self.tol is not None:
            parts.append(f"err={self.error:.3e} tol={self.tol:.1e}")
        elif self.value is not None:
            parts.append(f"value={_fmt(self.value)}")
        if self.note:
            parts.append(self.note)
        return "  ".join(parts)


def _fmt(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.15g}"
    return str(v)


@dataclass
class Report:
    """Ordered list of checks; report-only routines never raise on failure."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, **kw: Any) -> Check:
        chk = Check(name, bool(passed), **kw)
        self.checks.append(chk)
        return chk

    def close(self, name: str, value: float, expected: float, tol: float,
              relative: bool = False, note: str = "") -> Check:
        err = abs(value - expected)
        if relative:
            err /= max(abs(expected), 1e-300)
        return self.add(name, err <= tol, value=value, expected=expected,
                        error=err, tol=tol, note=note)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            if prefix:
                c = Check(prefix + c.name, c.passed, c.value, c.expected,
                          c.error, c.tol, c.note)
            self.checks.append(c)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __str__(self) -> str:
        head = f"{self.title}: {len(self.checks) - len(self.failures)}/{len(self.checks)} passed"
        return "\n".join([head] + ["  " + c.line() for c in self.checks])


# Monotonicity verifiers return the same structure.
MonotoneReport = Report


def monotone_checks(report: Report, name: str, xs, ys, direction: str,
                    strict: bool = True, rtol: float = 0.0) -> bool:
    """Record whether ``ys`` is monotone in ``direction`` along ``xs``.

    ``rtol`` absorbs rounding noise when consecutive samples are nearly equal.
    """
    sign = 1.0 if direction == "increasing" else -1.0
    bad = []
    for i in range(len(ys) - 1):
        d = sign * (ys[i + 1] - ys[i])
        slack = rtol * max(abs(ys[i]), abs(ys[i + 1]))
        if d < -slack or (strict and d <= 0 and slack == 0.0):
            bad.append(xs[i])
    ok = not bad
    note = "" if ok else f"violations near x={bad[:3]}"
    report.add(f"{name} {direction}", ok, value=len(ys), note=note)
    return ok
