"""Problem kinds and ordered eigenvalue lists with provenance."""

import enum
import math
from dataclasses import dataclass


class ProblemKind(enum.Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"
    CLAMPED = "clamped"
    BUCKLING = "buckling"


class Provenance(enum.Enum):
    CLOSED_FORM = "closed_form"
    DISCRETE = "discrete"
    DISCRETE_EXTRAPOLATED = "discrete_extrapolated"


@dataclass(frozen=True)
class Spectrum:
    """Ordered finite eigenvalue list (multiplicity by repetition).

    ``allowance`` is the relative discretization budget of the values
    (zero for closed forms, 3x the observed Richardson residual for
    extrapolated spectra); ``mesh_h`` records the mesh width of discrete
    spectra so extrapolation can verify the exact ratio-2 precondition.
    """

    kind: ProblemKind
    dimension: int
    values: tuple[float, ...]
    domain_label: str
    provenance: Provenance
    mesh_h: float | None = None
    allowance: float = 0.0

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError(f"dimension must be >= 2, got {self.dimension}")
        if not self.values:
            raise ValueError("spectrum must contain at least one eigenvalue")
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError(f"non-finite eigenvalue in {vals}")
        for a, b in zip(vals, vals[1:]):
            if b < a - 1e-12 * max(1.0, abs(a)):
                raise ValueError(f"eigenvalues not sorted: {a} > {b}")
        if self.kind is ProblemKind.NEUMANN:
            scale = vals[1] if len(vals) > 1 else 1.0
            if abs(vals[0]) > 1e-8 * max(scale, 1.0):
                raise ValueError(f"Neumann spectrum must start at 0, got {vals[0]}")
            if any(v <= 0.0 for v in vals[1:]):
                raise ValueError("nonzero Neumann eigenvalues must be positive")
        else:
            if any(v <= 0.0 for v in vals):
                raise ValueError(f"{self.kind.value} eigenvalues must be positive")
        if self.kind is ProblemKind.DIRICHLET and len(vals) > 1 and not vals[0] < vals[1]:
            raise ValueError("first Dirichlet eigenvalue must be simple")

    def __len__(self):
        return len(self.values)
