"""Check cases and structured reports.

Each case binds a named claim (its anchor) to an executable check over
concrete groups.  Reports carry pass/fail/skip plus metrics; a case
fails only if it ran and an expectation was missed, and skips carry the
reason.  Cap overruns surface as skips so sibling cases keep running.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from concurrent.futures import ThreadPoolExecutor

from ..permgrp.carter import SearchCapError
from ..permgrp.search import SearchCapExceeded
from ..linear.projective import DomainCapExceeded


class SkipCase(Exception):
    """Raised inside a runner to report a deliberate skip."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


_SKIP_EXCEPTIONS = (SkipCase, SearchCapError, SearchCapExceeded, DomainCapExceeded)


@dataclass(frozen=True)
class CheckCase:
    id: str
    description: str
    anchor: str
    tier: str                      # "quick" | "full"
    group_specs: tuple
    expected: dict
    budget_s: float
    runner: object                 # callable () -> (metrics: dict, details: str)

    def __post_init__(self):
        if self.tier not in ("quick", "full"):
            raise ValueError(f"bad tier {self.tier!r}")


@dataclass
class CheckReport:
    id: str
    status: str                    # "pass" | "fail" | "skip"
    anchor: str
    metrics: dict = field(default_factory=dict)
    details: str = ""
    reason: str = ""

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "anchor": self.anchor,
            "metrics": self.metrics,
            "details": self.details,
        }
        if self.reason:
            out["reason"] = self.reason
        return out


class CheckFailure(AssertionError):
    """An expectation was missed; the message is the evidence."""


def expect(condition: bool, message: str):
    if not condition:
        raise CheckFailure(message)


def run_case_obj(case: CheckCase) -> CheckReport:
    start = time.monotonic()
    try:
        metrics, details = case.runner()
        status, reason = "pass", ""
    except CheckFailure as exc:
        metrics, details = {}, str(exc)
        status, reason = "fail", ""
    except _SKIP_EXCEPTIONS as exc:
        metrics, details = {}, ""
        status = "skip"
        reason = getattr(exc, "reason", str(exc))
    metrics = dict(metrics)
    metrics["ms"] = round(1000 * (time.monotonic() - start), 1)
    return CheckReport(case.id, status, case.anchor, metrics, details, reason)


class Registry:
    def __init__(self):
        self._cases: dict[str, CheckCase] = {}

    def add(self, case: CheckCase):
        if case.id in self._cases:
            raise ValueError(f"duplicate case id {case.id}")
        self._cases[case.id] = case

    def case(self, case_id: str) -> CheckCase:
        if case_id not in self._cases:
            raise KeyError(f"unknown case id {case_id!r}")
        return self._cases[case_id]

    def list_cases(self, tier: str | None = None) -> list[CheckCase]:
        if tier is not None and tier not in ("quick", "full"):
            raise ValueError(f"unknown tier {tier!r}")
        return [c for c in self._cases.values()
                if tier is None or c.tier == tier]

    def run_case(self, case_id: str) -> CheckReport:
        return run_case_obj(self.case(case_id))

    def run_all(self, tier: str | None = None, parallelism: int = 1) -> list[CheckReport]:
        cases = self.list_cases(tier)
        if parallelism <= 1 or len(cases) <= 1:
            return [run_case_obj(c) for c in cases]
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            return list(pool.map(run_case_obj, cases))


def render_reports(reports, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2)
    lines = []
    for r in reports:
        ms = r.metrics.get("ms", 0)
        if r.status == "pass":
            lines.append(f"PASS  {r.id}  ({ms} ms)")
        elif r.status == "skip":
            lines.append(f"SKIP  {r.id}  [{r.reason}]")
        else:
            lines.append(f"FAIL! {r.id}  ({ms} ms)  {r.details}")
    return "\n".join(lines)


def parse_reports(text: str) -> list[CheckReport]:
    data = json.loads(text)
    out = []
    for item in data:
        out.append(CheckReport(
            id=item["id"], status=item["status"], anchor=item["anchor"],
            metrics=item.get("metrics", {}), details=item.get("details", ""),
            reason=item.get("reason", ""),
        ))
    return out
