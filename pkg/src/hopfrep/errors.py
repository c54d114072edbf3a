"""Exceptions and the validation-report type shared by all layers."""

from __future__ import annotations

from dataclasses import dataclass, field


class HopfRepError(Exception):
    """Base class for all package errors."""


class FieldError(HopfRepError):
    """Invalid finite-field parameters or element data."""


class LinAlgError(HopfRepError):
    """Matrix shape or solvability violation."""


class AlgebraError(HopfRepError):
    """Structure-constant data violating an algebra contract."""


class HopfError(HopfRepError):
    """Hopf-layer data violating a coalgebra or antipode contract."""


class GroupError(HopfRepError):
    """Cayley-table data violating the group axioms."""


class ChopBudgetError(HopfRepError):
    """The composition-factor search exhausted its element budget."""


class RecipeError(HopfRepError):
    """Malformed recipe or input file."""


@dataclass
class ValidationReport:
    """Outcome of an axiom check: `ok` plus one entry per violation found."""

    subject: str
    ok: bool = True
    failures: list[dict] = field(default_factory=list)

    def fail(self, check: str, **detail) -> None:
        self.ok = False
        self.failures.append({"check": check, **detail})

    def raise_if_failed(self, exc_type=HopfRepError) -> None:
        if not self.ok:
            first = self.failures[0]
            raise exc_type(f"{self.subject}: {first}")

    def first_failure(self) -> dict | None:
        return self.failures[0] if self.failures else None


def require_validated(obj, what: str) -> None:
    """Gate used by operations that refuse unvalidated inputs."""
    if not getattr(obj, "validated", False):
        raise HopfRepError(f"{what} has not passed its axiom check")
