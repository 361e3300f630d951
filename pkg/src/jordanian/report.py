"""Verification reports: named checks with exact residual descriptions."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def note(self, message: str) -> None:
        self.notes.append(message)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[c.status]
            out.append(f"{mark}  {c.name}" + (f": {c.detail}" if c.detail else ""))
        for n in self.notes:
            out.append(f"NOTE  {n}")
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail}
                       for c in self.checks],
            "notes": list(self.notes),
            "counts": self.counts(),
            "passed": self.ok,
            "elapsed_s": round(self.elapsed, 6),
        }


def zero_check(name: str, residual) -> Check:
    """A check that passes iff the residual matrix is exactly zero."""
    if residual.is_zero:
        return Check(name, "pass", "exact zero")
    i, k, p = residual.first_nonzero()
    return Check(name, "fail",
                 f"residual degree {residual.max_degree()}; entry ({i},{k}) = {p}")


def equality_check(name: str, left, right) -> Check:
    """A check that two matrices agree entrywise, exactly."""
    return zero_check(name, left - right)


def scalar_check(name: str, left, right) -> Check:
    """A check that two scalars agree exactly."""
    if left == right:
        return Check(name, "pass", "exact")
    return Check(name, "fail", f"{left} != {right}")
