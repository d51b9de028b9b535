"""Sampled complex radial functions and grid helpers."""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

LABELS = ("wavefunction", "superpotential", "potential", "transformed")


def check_grid(grid):
    r = np.asarray(grid, dtype=float)
    if r.ndim != 1 or r.size == 0:
        raise DomainError("radial grid must be a non-empty 1-D sequence")
    if r[0] <= 0:
        raise DomainError(f"radial grid must start at r > 0, got r_min={r[0]!r}")
    if r.size > 1 and np.any(np.diff(r) <= 0):
        raise DomainError("radial grid must be strictly increasing")
    return r


@dataclass
class RadialFunction:
    """Complex values on a radial grid.

    ``deriv`` carries the closed-form r-derivative when the producer knows it;
    ``meta`` records which closed form applies on each piece.
    """

    grid: np.ndarray
    values: np.ndarray
    label: str = "wavefunction"
    deriv: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.grid = check_grid(self.grid)
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != self.grid.shape:
            raise DomainError("values and grid differ in shape")
        if not np.all(np.isfinite(self.values)):
            bad = self.grid[~np.isfinite(self.values)]
            raise DomainError(f"non-finite values at r = {bad[:5]}")
        if self.deriv is not None:
            self.deriv = np.asarray(self.deriv, dtype=complex)
        if self.label not in LABELS:
            raise DomainError(f"unknown label {self.label!r}")

    @property
    def real(self):
        return self.values.real

    @property
    def imag(self):
        return self.values.imag

    def __len__(self):
        return self.grid.size
