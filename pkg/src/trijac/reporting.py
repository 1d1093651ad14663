"""Shared result records for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .poly import Poly

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


def format_params(params: Mapping[str, Any]) -> dict[str, str]:
    """Render parameter values as exact "p/q" strings (ints stay bare)."""
    return {k: str(v) for k, v in params.items()}


def poly_coeff_strings(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs] if not p.is_zero else ["0"]


@dataclass
class CaseRecord:
    case_id: str
    params: dict[str, str]
    status: str
    counterexample: dict[str, Any] | None = None

    def as_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "case_id": self.case_id,
            "params": self.params,
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseRecord] = field(default_factory=list)

    def add_pass(self, case_id: str, params: Mapping[str, Any] | None = None) -> None:
        self.cases.append(CaseRecord(case_id, format_params(params or {}), PASS))

    def add_fail(
        self,
        case_id: str,
        params: Mapping[str, Any] | None = None,
        counterexample: Mapping[str, Any] | None = None,
    ) -> None:
        self.cases.append(
            CaseRecord(
                case_id,
                format_params(params or {}),
                FAIL,
                dict(counterexample or {}),
            )
        )

    def add_skip(self, case_id: str, params: Mapping[str, Any] | None = None) -> None:
        self.cases.append(CaseRecord(case_id, format_params(params or {}), SKIPPED))

    def check(
        self,
        case_id: str,
        ok: bool,
        params: Mapping[str, Any] | None = None,
        counterexample: Mapping[str, Any] | None = None,
    ) -> bool:
        if ok:
            self.add_pass(case_id, params)
        else:
            self.add_fail(case_id, params, counterexample)
        return ok

    def extend(self, other: VerificationReport) -> None:
        self.cases.extend(other.cases)

    @property
    def pass_count(self) -> int:
        return sum(1 for c in self.cases if c.status == PASS)

    @property
    def fail_count(self) -> int:
        return sum(1 for c in self.cases if c.status == FAIL)

    @property
    def skip_count(self) -> int:
        return sum(1 for c in self.cases if c.status == SKIPPED)

    @property
    def ok(self) -> bool:
        return self.fail_count == 0

    def first_failure(self) -> CaseRecord | None:
        for c in self.cases:
            if c.status == FAIL:
                return c
        return None


def poly_counterexample(index: Any, lhs: Poly, rhs: Poly, **extra: Any) -> dict[str, Any]:
    """Standard counterexample payload: indices plus the offending difference."""
    out = {
        "index": index,
        "difference": poly_coeff_strings(lhs - rhs),
    }
    out.update({k: str(v) for k, v in extra.items()})
    return out


def rational_counterexample(index: Any, lhs: Fraction, rhs: Fraction, **extra: Any) -> dict[str, Any]:
    out = {"index": index, "lhs": str(lhs), "rhs": str(rhs)}
    out.update({k: str(v) for k, v in extra.items()})
    return out
