"""Polynomially bounded weights: powers (1+|x|)^s, products and tensors.

A weight carries a moderation witness (C, tau) certifying
eta(x+y) <= C * eta(x) * (1+|y|)^tau; for the canonical powers the witness is
(1, |s|) by Peetre's inequality, for either sign of s. ``moderation_check``
measures the witness empirically by scanning sampled point pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import GridSpec

__all__ = [
    "Weight",
    "PowerWeight",
    "ProductWeight",
    "TensorWeight",
    "RadialWeight2D",
    "make_power_weight",
    "moderation_check",
]


class Weight:
    """Base class; subclasses implement eval on points of their own dimension."""

    #: moderation witness (C, tau)
    witness: tuple

    def eval(self, points) -> np.ndarray:
        raise NotImplementedError

    def eval_radius(self, radii) -> np.ndarray:
        """Evaluate using precomputed Euclidean distances (radial weights only)."""
        raise NotImplementedError


@dataclass(frozen=True)
class PowerWeight(Weight):
    """v_s(x) = (1 + |x|)^s with witness (1, |s|)."""

    s: float

    @property
    def witness(self) -> tuple:
        return (1.0, abs(self.s))

    def eval(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        r = np.abs(pts) if pts.ndim <= 1 else np.sqrt(np.sum(pts**2, axis=-1))
        return self.eval_radius(r)

    def eval_radius(self, radii) -> np.ndarray:
        return (1.0 + np.asarray(radii, dtype=float)) ** self.s


@dataclass(frozen=True)
class ProductWeight(Weight):
    """Pointwise product of weights on the same space."""

    factors: tuple

    @property
    def witness(self) -> tuple:
        c = float(np.prod([w.witness[0] for w in self.factors]))
        tau = float(sum(w.witness[1] for w in self.factors))
        return (c, tau)

    def eval(self, points) -> np.ndarray:
        out = None
        for w in self.factors:
            v = w.eval(points)
            out = v if out is None else out * v
        return out

    def eval_radius(self, radii) -> np.ndarray:
        out = None
        for w in self.factors:
            v = w.eval_radius(radii)
            out = v if out is None else out * v
        return out


@dataclass(frozen=True)
class TensorWeight(Weight):
    """w(x, xi) = w1(x) * w2(xi) on the time-frequency plane."""

    w1: Weight
    w2: Weight

    @property
    def witness(self) -> tuple:
        c1, t1 = self.w1.witness
        c2, t2 = self.w2.witness
        return (c1 * c2, t1 + t2)

    def eval_tf(self, xradii: np.ndarray, xiradii: np.ndarray) -> np.ndarray:
        """Weight matrix indexed (x point, xi point) from per-grid radii."""
        a = self.w1.eval_radius(xradii).ravel()
        b = self.w2.eval_radius(xiradii).ravel()
        return np.outer(a, b)


@dataclass(frozen=True)
class RadialWeight2D(Weight):
    """v_s(x, xi) = (1 + |(x, xi)|)^s on the time-frequency plane."""

    s: float

    @property
    def witness(self) -> tuple:
        return (1.0, abs(self.s))

    def eval_tf(self, xradii: np.ndarray, xiradii: np.ndarray) -> np.ndarray:
        a = np.asarray(xradii, dtype=float).ravel()
        b = np.asarray(xiradii, dtype=float).ravel()
        r = np.sqrt(a[:, None] ** 2 + b[None, :] ** 2)
        return (1.0 + r) ** self.s


def make_power_weight(s: float) -> PowerWeight:
    """Canonical polynomially bounded weight v_s(x) = (1+|x|)^s."""
    if not np.isfinite(s):
        raise ValueError("exponent must be finite")
    return PowerWeight(float(s))


def moderation_check(
    w: Weight, tau: float, grid: GridSpec, max_pairs: int = 2_000_000
) -> tuple:
    """Empirical moderation constant over sampled grid pairs.

    Returns (C_emp, passed) with
    C_emp = max over sampled (x, y) of eta(x+y) / (eta(x) (1+|y|)^tau).
    For d=1 grids up to ~1400 points the scan is exhaustive over all pairs;
    larger grids are strided so the pair count stays below ``max_pairs``.
    """
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    if grid.dim == 1:
        pts = grid.axis_points()
    else:
        pts = grid.points().reshape(-1, 2)
    m = len(pts)
    stride = 1
    while (m // stride) ** 2 > max_pairs:
        stride += 1
    pts = pts[::stride]
    if grid.dim == 1:
        sum_r = np.abs(pts[:, None] + pts[None, :])
        x_r = np.abs(pts)[:, None]
        y_r = np.abs(pts)[None, :]
    else:
        s = pts[:, None, :] + pts[None, :, :]
        sum_r = np.sqrt(np.sum(s**2, axis=-1))
        x_r = np.sqrt(np.sum(pts**2, axis=-1))[:, None]
        y_r = np.sqrt(np.sum(pts**2, axis=-1))[None, :]
    num = w.eval_radius(sum_r)
    den = w.eval_radius(x_r) * (1.0 + y_r) ** tau
    c_emp = float(np.max(num / den))
    return c_emp, bool(np.isfinite(c_emp))
