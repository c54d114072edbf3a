"""Verdict reports for the certification commands.

Reports are deterministic given (input, seed): evidence never contains
wall-clock data, and the JSON rendering is canonical.  Timing is tracked
in memory and printed on request, but excluded from the canonical bytes so
repeated runs compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

TOOL_VERSION = "0.1.0"

EXIT_OK = 0
EXIT_ASSERTION_FAILED = 1
EXIT_MALFORMED_INPUT = 2
EXIT_ASSUMPTION_VIOLATED = 3


@dataclass
class Verdict:
    check: str
    passed: bool
    evidence: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"check": self.check, "pass": self.passed, "evidence": self.evidence}


@dataclass
class Report:
    command: str
    instance: str
    seed: int
    verdicts: list[Verdict] = field(default_factory=list)
    inputs: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    timing_s: float | None = None

    def add(self, check: str, passed: bool, **evidence) -> Verdict:
        v = Verdict(check, passed, evidence)
        self.verdicts.append(v)
        return v

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "command": self.command,
            "instance": self.instance,
            "seed": self.seed,
            "tool_version": TOOL_VERSION,
            "inputs": self.inputs,
            "notes": list(self.notes),
            "ok": self.ok,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }
        if include_timing:
            out["timing_s"] = self.timing_s
        return out

    def render_text(self) -> str:
        lines = [f"# {self.command}: {self.instance} (seed {self.seed})"]
        for note in self.notes:
            lines.append(f"note: {note}")
        for v in self.verdicts:
            status = "PASS" if v.passed else "FAIL"
            detail = ""
            if v.evidence:
                detail = " " + ", ".join(f"{k}={v.evidence[k]}" for k in sorted(v.evidence))
            lines.append(f"[{status}] {v.check}{detail}")
        lines.append("result: " + ("OK" if self.ok else "FAILED"))
        return "\n".join(lines) + "\n"


@dataclass
class SeriesStep:
    index: int
    dim: int
    is_hopf_subalgebra: bool
    is_normal: bool
    commutative_quotient: bool
    rank: int | None
    semisimple: bool | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        structural = self.is_hopf_subalgebra and self.is_normal and self.commutative_quotient
        rank_ok = self.rank is not None
        semi_ok = self.semisimple is not False
        return structural and rank_ok and semi_ok

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "dim": self.dim,
            "is_hopf_subalgebra": self.is_hopf_subalgebra,
            "is_normal": self.is_normal,
            "commutative_quotient": self.commutative_quotient,
            "rank": self.rank,
            "semisimple": self.semisimple,
            "detail": self.detail,
        }


@dataclass
class SeriesCertificate:
    """Per-step verdicts for a lower-solvable chain; valid iff all pass."""

    instance: str
    steps: list[SeriesStep] = field(default_factory=list)
    endpoints_ok: bool = True
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.endpoints_ok and all(s.ok for s in self.steps)

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "ok": self.ok,
            "endpoints_ok": self.endpoints_ok,
            "detail": self.detail,
            "steps": [s.to_dict() for s in self.steps],
        }
