"""Window builders: smooth bumps, plateaus, Gaussians and Hermite functions.

All windows are returned as :class:`SampledFunction` on a caller-supplied
grid. The bump exp(-1/(1-x^2)) and the closed-form smoothstep derived from
exp(-1/t) give windows that are exactly 0 outside and exactly 1 on their
plateau, which several decomposition identities rely on.
"""

from __future__ import annotations

import numpy as np

from .grid import GridSpec, SampledFunction

__all__ = [
    "bump_profile",
    "smoothstep",
    "bump",
    "plateau",
    "gaussian",
    "normalized_gaussian",
    "hermite_function",
    "hermite_basis_matrix",
]


def bump_profile(t: np.ndarray) -> np.ndarray:
    """exp(-1/(1-t^2)) on (-1, 1), zero outside."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    inside = np.abs(t) < 1.0
    with np.errstate(divide="ignore", over="ignore"):
        out[inside] = np.exp(-1.0 / (1.0 - t[inside] ** 2))
    return out


def smoothstep(t: np.ndarray) -> np.ndarray:
    """C-infinity step: exactly 0 for t <= 0, exactly 1 for t >= 1."""
    t = np.asarray(t, dtype=float)

    def e(u):
        out = np.zeros_like(u)
        pos = u > 0
        with np.errstate(divide="ignore", over="ignore"):
            out[pos] = np.exp(-1.0 / u[pos])
        return out

    a = e(t)
    b = e(1.0 - t)
    return a / (a + b + (a + b == 0))


def _tensorize(grid: GridSpec, profile) -> np.ndarray:
    x = grid.axis_points()
    v = profile(x)
    if grid.dim == 1:
        return v
    return v[:, None] * v[None, :]


def bump(grid: GridSpec, radius: float = 1.0, normalize: str | None = None) -> SampledFunction:
    """Tensorized bump supported in (-radius, radius)^d.

    normalize: None keeps the raw profile, "mass" scales to unit integral,
    "peak" scales to unit maximum.
    """
    vals = _tensorize(grid, lambda x: bump_profile(x / radius))
    if normalize == "mass":
        vals = vals / (vals.sum() * grid.cell_volume)
    elif normalize == "peak":
        vals = vals / vals.max()
    elif normalize is not None:
        raise ValueError(f"unknown normalization {normalize!r}")
    return SampledFunction(grid, vals)


def plateau(grid: GridSpec, inner: float, outer: float) -> SampledFunction:
    """Smooth cutoff: exactly 1 on [-inner, inner]^d, 0 outside (-outer, outer)^d.

    Built per axis from the closed-form smoothstep, then tensorized, so the
    plateau values are exact 0/1 rather than quadrature approximations.
    """
    if not 0 < inner < outer:
        raise ValueError("need 0 < inner < outer")

    def profile(x):
        return smoothstep((outer - np.abs(x)) / (outer - inner))

    return SampledFunction(grid, _tensorize(grid, profile))


def gaussian(grid: GridSpec, a: float = 1.0, center=None, freq=None) -> SampledFunction:
    """exp(-pi |x - center|^2 / a), optionally modulated by exp(2 pi i x.freq)."""
    pts = grid.points()
    if grid.dim == 1:
        c = 0.0 if center is None else float(np.atleast_1d(center)[0])
        r2 = (pts - c) ** 2
        phase = 0.0 if freq is None else 2j * np.pi * pts * float(np.atleast_1d(freq)[0])
    else:
        c = np.zeros(2) if center is None else np.asarray(center, dtype=float)
        r2 = np.sum((pts - c) ** 2, axis=-1)
        phase = (
            0.0
            if freq is None
            else 2j * np.pi * np.tensordot(pts, np.asarray(freq, dtype=float), axes=([-1], [0]))
        )
    vals = np.exp(-np.pi * r2 / a)
    if freq is not None:
        vals = vals * np.exp(phase)
    return SampledFunction(grid, vals)


def normalized_gaussian(grid: GridSpec, a: float = 1.0) -> SampledFunction:
    """Gaussian scaled to unit L2 norm on the grid."""
    g = gaussian(grid, a=a)
    return g * (1.0 / g.norm2())


def hermite_basis_matrix(grid: GridSpec, count: int) -> np.ndarray:
    """First ``count`` L2-normalized Hermite functions sampled on a d=1 grid.

    Uses the eigenfunctions of the 2*pi Fourier convention,
    h_0(x) = 2^(1/4) exp(-pi x^2), generated by the stable three-term
    recurrence with on-grid renormalization (the closed form overflows past
    n ~ 30). Returns an array of shape (count, n).
    """
    if grid.dim != 1:
        raise ValueError("Hermite functions are implemented for d=1 only")
    if count < 1:
        raise ValueError("count must be >= 1")
    t = np.sqrt(2.0 * np.pi) * grid.axis_points()
    h = np.zeros((count, grid.n))
    h[0] = np.pi**-0.25 * np.exp(-(t**2) / 2.0)
    if count > 1:
        h[1] = np.sqrt(2.0) * t * h[0]
    for n in range(1, count - 1):
        h[n + 1] = np.sqrt(2.0 / (n + 1)) * t * h[n] - np.sqrt(n / (n + 1)) * h[n - 1]
    h *= (2.0 * np.pi) ** 0.25
    norms = np.sqrt(np.sum(np.abs(h) ** 2, axis=1) * grid.cell_volume)
    return h / norms[:, None]


def hermite_function(grid: GridSpec, n: int) -> SampledFunction:
    """n-th L2-normalized Hermite function (n = 0, 1, ...) on a d=1 grid."""
    return SampledFunction(grid, hermite_basis_matrix(grid, n + 1)[n])
