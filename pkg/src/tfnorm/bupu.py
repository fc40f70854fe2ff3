"""Integer-lattice bounded uniform partitions of unity.

The canonical partition divides the bump b(x) = exp(-1/(1-x^2)) by the sum
of its integer translates; the quotient is smooth, supported exactly in
(-1, 1)^d, takes values in [0, 1], and its translates sum to 1 at every
interior grid point by construction. The lattice is Z^d intersected with
[-K, K]^d for K = ceil(L) + 1, beyond which every window misses the domain.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

import numpy as np

from .grid import GridSpec, SampledFunction, _shift_values
from .weights import PowerWeight, Weight

__all__ = ["Bupu", "make_integer_bupu", "fl1_nu_norm", "validate_bupu", "BupuValidationReport"]


@dataclass(frozen=True)
class Bupu:
    """Lattice partition of unity: base window plus its integer translates."""

    grid: GridSpec
    base: SampledFunction
    lattice_radius: int

    def __post_init__(self):
        object.__setattr__(self, "_window_cache", {})

    @property
    def lattice(self) -> list:
        """Lattice points as d-tuples of ints, in fixed lexicographic order."""
        rng = range(-self.lattice_radius, self.lattice_radius + 1)
        if self.grid.dim == 1:
            return [(k,) for k in rng]
        return list(itertools.product(rng, rng))

    def window(self, k) -> SampledFunction:
        """Translate of the base window to lattice point k (zero filled)."""
        k = tuple(int(c) for c in np.atleast_1d(k))
        cache = self._window_cache
        if k not in cache:
            steps = int(round(1.0 / self.grid.spacing))
            counts = tuple(c * steps for c in k)
            cache[k] = SampledFunction(
                self.grid, _shift_values(self.base.values, counts)
            )
        return cache[k]

    def partition_sum(self) -> np.ndarray:
        total = np.zeros(self.grid.shape)
        for k in self.lattice:
            total = total + self.window(k).values.real
        return total

    def interior_mask(self, margin: float = 2.0) -> np.ndarray:
        """Points with sup-norm distance at least ``margin`` from the boundary."""
        if self.grid.dim == 1:
            r = np.abs(self.grid.axis_points())
        else:
            r = np.max(np.abs(self.grid.points()), axis=-1)
        return r <= self.grid.half_width - margin


def make_integer_bupu(grid: GridSpec) -> Bupu:
    """Canonical bump partition of unity on the integer lattice of ``grid``.

    Requires the grid spacing to divide 1 so that integer translates are
    exact sample shifts.
    """
    steps = 1.0 / grid.spacing
    if abs(steps - round(steps)) > 1e-9:
        raise ValueError(
            f"grid spacing {grid.spacing} does not divide 1; "
            "integer-lattice windows would need interpolation"
        )
    x = grid.axis_points()
    prof = _bump01(x)
    # sum of integer translates of the bump along one axis; 1-periodic away
    # from the lattice truncation, so dividing gives a partition of unity
    radius = int(np.ceil(grid.half_width)) + 1
    total1 = np.zeros_like(prof)
    step = int(round(steps))
    for k in range(-radius, radius + 1):
        total1 += _shift_values(prof, (k * step,))
    with np.errstate(invalid="ignore", divide="ignore"):
        base1 = np.where(prof > 0.0, prof / np.where(total1 > 0, total1, 1.0), 0.0)
    if grid.dim == 1:
        base = base1
    else:
        base = base1[:, None] * base1[None, :]
    return Bupu(grid, SampledFunction(grid, base), radius)


def _bump01(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    inside = np.abs(x) < 1.0
    with np.errstate(divide="ignore", over="ignore"):
        out[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    return out


def fl1_nu_norm(phi: SampledFunction, nu: Weight | None = None) -> float:
    """FL^1_nu norm of a window: the weighted L^1 norm of F^(-1) phi.

    Warns when the extrapolated spectral tail beyond the dual grid exceeds
    1e-6 of the total mass (aliasing guard: the quadrature only sees the
    dual domain, so the reported value undercounts by roughly that tail).
    """
    from .transforms import inverse_fourier

    if nu is None:
        nu = PowerWeight(0.0)
    spec = inverse_fourier(phi)
    g = spec.grid
    integrand = np.abs(spec.values) * nu.eval_radius(g.radii())
    total = float(integrand.sum() * g.cell_volume)
    if total > 0.0:
        r = g.radii()
        hw = g.half_width
        band1 = float(integrand[(r >= 0.5 * hw) & (r < 0.75 * hw)].sum() * g.cell_volume)
        band2 = float(integrand[r >= 0.75 * hw].sum() * g.cell_volume)
        if band2 > 0.0 and band1 > band2:
            est_tail = band2 * band2 / (band1 - band2)
        else:
            est_tail = band2
        if est_tail > 1e-6 * total:
            warnings.warn(
                f"spectral tail beyond the dual grid estimated at "
                f"{est_tail / total:.2e} of the FL^1 mass; norm is aliased",
                stacklevel=2,
            )
    return total


@dataclass(frozen=True)
class BupuValidationReport:
    max_partition_defect: float
    support_violation_count: int
    overlap_bound: int
    norm_bound: float
    passed: bool


def validate_bupu(b: Bupu, nu: Weight | None = None) -> BupuValidationReport:
    """Check the partition properties on the grid.

    Reported: max |sum_k phi_k - 1| over interior points, count of samples
    violating the support/range constraints (phi outside [0, 1] or nonzero
    outside (-1, 1)^d), the max number of overlapping windows, and the
    uniform FL^1_nu bound of the base window. Passes iff the defect is at
    most 1e-10 with zero violations.
    """
    interior = b.interior_mask()
    defect = float(np.max(np.abs(b.partition_sum() - 1.0)[interior]))

    vals = b.base.values.real
    if b.grid.dim == 1:
        outside = np.abs(b.grid.axis_points()) >= 1.0
    else:
        outside = np.max(np.abs(b.grid.points()), axis=-1) >= 1.0
    violations = int(np.count_nonzero(np.abs(b.base.values[outside]) > 1e-14))
    violations += int(np.count_nonzero(vals < -1e-14))
    violations += int(np.count_nonzero(vals > 1.0 + 1e-12))

    counts = np.zeros(b.grid.shape, dtype=int)
    for k in b.lattice:
        counts += np.abs(b.window(k).values) > 1e-14
    overlap = int(np.max(counts[interior]))

    m = fl1_nu_norm(b.base, nu)
    passed = bool(defect <= 1e-10 and violations == 0 and np.isfinite(m))
    return BupuValidationReport(defect, violations, overlap, m, passed)
