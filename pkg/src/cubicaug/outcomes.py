from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Infeasible:
    """Negative outcome with a machine-readable reason.

    Reasons used by the pipeline: ``degree`` (a vertex of degree above 3),
    ``nonplanar``, ``structural`` (no bridgeless cubic planar supergraph), and
    ``cubic-component`` (biconnected mode with an already cubic component).
    """

    reason: str = "structural"
    detail: str = ""

    def __bool__(self) -> bool:
        return False


class PreconditionError(ValueError):
    """An input violates a documented precondition (distinct from infeasibility)."""
