"""Concrete space atoms: weighted L^p, FL^p, weighted C_0, mixed L^{p,q}.

Each atom knows the closed-form growth of its translation and modulation
operator norms as a function of its power weight: translations on L^p_{v_s}
grow like (1+|x|)^|s| (for either sign of s), modulations are isometries;
the Fourier image swaps the two roles. ``operator_norm_translation``
measures the translation growth on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import GridSpec
from .weights import PowerWeight, ProductWeight, TensorWeight, Weight

__all__ = [
    "LpSpec",
    "FLpSpec",
    "C0Spec",
    "MixedSpec",
    "SpaceSpec",
    "weight_exponent",
    "operator_norm_translation",
]


def weight_exponent(w: Weight | None) -> float:
    """Total power of a weight built from v_s factors."""
    if w is None:
        return 0.0
    if isinstance(w, PowerWeight):
        return w.s
    if isinstance(w, ProductWeight):
        return float(sum(weight_exponent(f) for f in w.factors))
    raise TypeError(f"no power exponent for weight {w!r}")


@dataclass(frozen=True)
class LpSpec:
    """Weighted Lebesgue space L^p_w; p = inf gives the weighted sup norm."""

    p: float
    weight: Weight = field(default_factory=lambda: PowerWeight(0.0))

    def omega(self, x) -> np.ndarray:
        return (1.0 + np.abs(np.asarray(x, dtype=float))) ** abs(
            weight_exponent(self.weight)
        )

    def nu(self, xi) -> np.ndarray:
        return np.ones_like(np.asarray(xi, dtype=float))


@dataclass(frozen=True)
class FLpSpec:
    """Fourier image of L^p_w; translation and modulation growths swap."""

    p: float
    weight: Weight = field(default_factory=lambda: PowerWeight(0.0))

    def omega(self, x) -> np.ndarray:
        return np.ones_like(np.asarray(x, dtype=float))

    def nu(self, xi) -> np.ndarray:
        return (1.0 + np.abs(np.asarray(xi, dtype=float))) ** abs(
            weight_exponent(self.weight)
        )


@dataclass(frozen=True)
class C0Spec:
    """Continuous functions vanishing at infinity against the weight w."""

    weight: Weight = field(default_factory=lambda: PowerWeight(0.0))

    def omega(self, x) -> np.ndarray:
        return (1.0 + np.abs(np.asarray(x, dtype=float))) ** abs(
            weight_exponent(self.weight)
        )

    def nu(self, xi) -> np.ndarray:
        return np.ones_like(np.asarray(xi, dtype=float))


@dataclass(frozen=True)
class MixedSpec:
    """Mixed-norm space on the TF plane: inner L^p in x, outer L^q in xi."""

    p: float
    q: float
    weight: TensorWeight


SpaceSpec = LpSpec | FLpSpec | C0Spec | MixedSpec


def operator_norm_translation(spec: SpaceSpec, x0: float, grid: GridSpec) -> float:
    """Measured operator norm of T_{x0} on the atom.

    For L^p_w and C_{w,0} this is the supremum over grid points t of
    w(t + x0)/w(t); for FL^p_w the translation growth equals the reflected
    modulation growth of L^p_w, which is identically 1.
    """
    if isinstance(spec, FLpSpec):
        return 1.0
    if not isinstance(spec, (LpSpec, C0Spec)):
        raise TypeError(f"unsupported atom {spec!r}")
    t = grid.axis_points() if grid.dim == 1 else grid.points().reshape(-1, grid.dim)
    w = spec.weight
    if grid.dim == 1:
        ratio = w.eval(t + x0) / w.eval(t)
    else:
        off = np.asarray(x0, dtype=float)
        ratio = w.eval(t + off) / w.eval(t)
    return float(np.max(ratio))
