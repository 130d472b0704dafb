"""Validation reports: every violated law with a witnessing location.

Validators never throw; they accumulate violations so a caller sees the
complete list.  Constructors that want hard failure raise StructureError
from a non-empty report.
"""

from __future__ import annotations

from dataclasses import dataclass


class StructureError(ValueError):
    """Raised when building an object whose axioms fail."""


@dataclass(frozen=True)
class Violation:
    law: str
    at: tuple
    detail: str

    def __str__(self) -> str:
        where = f" at {self.at}" if self.at else ""
        return f"{self.law}{where}: {self.detail}"


class ValidationReport:
    __slots__ = ("violations",)

    def __init__(self, violations: list[Violation] | None = None):
        self.violations: list[Violation] = list(violations or [])

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, at: tuple, detail: str) -> None:
        self.violations.append(Violation(law, at, detail))

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)

    def summary(self) -> str:
        if self.ok:
            return "valid"
        return "; ".join(str(v) for v in self.violations)

    def raise_if_invalid(self, what: str) -> None:
        if not self.ok:
            raise StructureError(f"{what}: {self.summary()}")

    def __len__(self) -> int:
        return len(self.violations)

    def __repr__(self) -> str:
        return f"ValidationReport({self.summary()})"
