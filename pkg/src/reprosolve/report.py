"""Consistency verdicts with the witnesses needed to re-check them by hand."""

from __future__ import annotations

from dataclasses import dataclass, field

from .matrix import Matrix


@dataclass(frozen=True, eq=False)
class ConsistencyReport:
    """Verdict of a consistency test.

    ``defects`` maps each clause of the criterion to its residual matrix; a
    clause holds exactly when its residual is zero. ``witnesses`` carries the
    {1}-inverses and particular solution behind the verdict.
    """

    consistent: bool
    defects: dict[str, Matrix] = field(default_factory=dict)
    witnesses: dict[str, Matrix] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def failed_clauses(self) -> tuple[str, ...]:
        return tuple(name for name, d in self.defects.items() if not d.is_zero())

    @property
    def defect(self) -> Matrix | None:
        """Residual of the first failing clause, or ``None`` when all hold."""
        for name in self.failed_clauses:
            return self.defects[name]
        return None
