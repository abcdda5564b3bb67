"""Structured pass/fail records for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of checking one named statement, with the witnesses examined."""

    statement: str
    passed: bool
    witnesses: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self):
        return {
            "statement": self.statement,
            "passed": self.passed,
            "witnesses": self.witnesses,
            "seconds": round(self.seconds, 6),
        }
