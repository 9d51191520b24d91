"""Uniform pass/fail reporting for the library's identity checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckFailure:
    """One counterexample: the index it occurred at and both sides as text."""

    n: int
    lhs: str
    rhs: str
    note: str = ""


@dataclass(frozen=True)
class CheckReport:
    """Outcome of checking one identity over a range of indices."""

    name: str
    checked: int
    failures: tuple[CheckFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def first_failure(self) -> CheckFailure | None:
        return self.failures[0] if self.failures else None

    def format_line(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.checked} cases)"
        f = self.failures[0]
        if not f.lhs and not f.rhs:
            return f"FAIL {self.name}: {f.note}"
        detail = f" [{f.note}]" if f.note else ""
        return f"FAIL {self.name}: first counterexample at n={f.n}: {f.lhs} != {f.rhs}{detail}"
