"""Finite-rank tensors, projective upper and injective lower bounds, and the
constructive decompositions that drive the norm-identification checks.

A finite tensor sum_j lam_j phi_j (x) psi_j keeps its first factors on the
time grid and its second factors on the frequency grid. The projective
(pi) norm of the represented element is never computed exactly; the toolkit
reports the bound attached to the given representation. The injective (eps)
norm is lower-bounded by sampling normalized dual functionals. Dual samples
are normalized with a certified safety factor, so the reported eps lower
bound never exceeds the pi upper bound computed with the matching norms:
the pairing estimate

    |<f', phi>| <= sum_{|r|<=1} |<f' phi_k, phi phi_{k+r}>|
               <= dual_amalgam(f') * overlap_factor * amalgam(phi)

is exact on the grid (cell Hoelder plus sequence Hoelder), with
overlap_factor = sum_{|r|<=1} max_k eta(k)/eta(k+r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bupu import Bupu, make_integer_bupu
from .grid import GridSpec, SampledFunction
from .norms import AmalgamSpec, GlobalSpec, INF0, amalgam_norm_discrete
from .spaces import C0Spec, FLpSpec, LpSpec
from .transforms import convolve, fourier, inverse_fourier
from .weights import PowerWeight, Weight
from .windows import plateau, bump

__all__ = [
    "FiniteTensor",
    "DualSample",
    "pi_upper_bound",
    "eps_lower_bound",
    "synthesize",
    "decompose_splitting",
    "decompose_mollified",
    "make_dual_samples",
    "aligned_dual_sample",
    "dual_amalgam_spec",
    "amalgam_evaluator",
    "fourier_amalgam_evaluator",
]


@dataclass(frozen=True)
class FiniteTensor:
    """Ordered terms (lam_j, phi_j, psi_j); phi on the time grid, psi on the
    frequency grid."""

    terms: tuple

    def __post_init__(self):
        for lam, phi, psi in self.terms:
            first = self.terms[0]
            if phi.grid != first[1].grid or psi.grid != first[2].grid:
                raise ValueError("all terms must share one pair of grids")

    @property
    def rank(self) -> int:
        return len(self.terms)

    def __add__(self, other: "FiniteTensor") -> "FiniteTensor":
        return FiniteTensor(self.terms + other.terms)

    def scale(self, c: complex) -> "FiniteTensor":
        return FiniteTensor(tuple((lam * c, phi, psi) for lam, phi, psi in self.terms))


def pi_upper_bound(t: FiniteTensor, norm_a, norm_b) -> float:
    """sum_j |lam_j| norm_a(phi_j) norm_b(psi_j): an upper bound for the
    projective norm of the element this representation denotes."""
    return float(
        sum(abs(lam) * norm_a(phi) * norm_b(psi) for lam, phi, psi in t.terms)
    )


@dataclass(frozen=True)
class DualSample:
    """Normalized functional pair; ``fa`` acts on first factors by the
    bilinear grid pairing, ``fb`` on second factors."""

    fa: SampledFunction
    fb: SampledFunction
    norm_a: float
    norm_b: float


def eps_lower_bound(t: FiniteTensor, duals) -> float:
    """max over samples of |sum_j lam_j <fa, phi_j> <fb, psi_j>|."""
    if t.rank == 0:
        return 0.0
    best = 0.0
    for d in duals:
        acc = 0.0 + 0.0j
        for lam, phi, psi in t.terms:
            acc += lam * d.fa.pair(phi) * d.fb.pair(psi)
        best = max(best, abs(acc))
    return float(best)


def synthesize(t: FiniteTensor, g: SampledFunction) -> SampledFunction:
    """sum_j lam_j (F^(-1) psi_j) . (phi_j * g): the adjoint-transform image
    of the tensor, computed term by term."""
    if g.norm2() == 0.0:
        raise ValueError("synthesis window must be nonzero")
    out = np.zeros(g.grid.shape, dtype=np.complex128)
    for lam, phi, psi in t.terms:
        out = out + lam * inverse_fourier(psi).values * convolve(phi, g).values
    return SampledFunction(g.grid, out)


def _active_lattice(f: SampledFunction, b: Bupu, rel_tol: float = 1e-14):
    """Lattice points whose windowed piece carries non-negligible L2 mass."""
    pieces = {}
    for k in b.lattice:
        w = b.window(k)
        m = float(np.linalg.norm((f.values * w.values).ravel()))
        pieces[k] = m
    peak = max(pieces.values(), default=0.0)
    if peak == 0.0:
        return []
    return [k for k in b.lattice if pieces[k] > rel_tol * peak]


def decompose_splitting(
    f: SampledFunction, b: Bupu | None = None
) -> tuple:
    """Split every windowed piece of f through a plateau pair.

    Uses g smooth with 0 <= g <= 1 and g = 1 on [-2, 2]^d, and nonnegative
    psi with psi = 1/(g*g) on [-1, 1]^d, so that
    f phi_k = (f phi_k T_k psi) . ((T_k g) * g). The returned tensor has
    terms (1, T_k g, F(f phi_k T_k psi)) and synthesizes back to f against
    the returned window g.
    """
    if b is None:
        b = make_integer_bupu(f.grid)
    grid = f.grid
    g = plateau(grid, 2.0, 3.0)
    c = convolve(g, g)
    ones_region = (
        np.abs(grid.axis_points()) <= 1.0
        if grid.dim == 1
        else np.max(np.abs(grid.points()), axis=-1) <= 1.0
    )
    if np.min(c.values.real[ones_region]) < 1.0 - 1e-9:
        raise RuntimeError("window autocorrelation dropped below 1 on the unit cell")
    cutoff = plateau(grid, 1.0, 1.5)
    with np.errstate(divide="ignore", invalid="ignore"):
        psi_vals = np.where(
            cutoff.values.real > 0.0,
            cutoff.values.real / np.where(c.values.real > 0.5, c.values.real, 1.0),
            0.0,
        )
    psi = SampledFunction(grid, psi_vals)
    steps = int(round(1.0 / grid.spacing))
    from .grid import _shift_values

    terms = []
    for k in _active_lattice(f, b):
        tk_psi = _shift_values(psi.values, tuple(c_ * steps for c_ in k))
        piece = SampledFunction(grid, f.values * b.window(k).values * tk_psi)
        tk_g = SampledFunction(grid, _shift_values(g.values, tuple(c_ * steps for c_ in k)))
        terms.append((1.0 + 0.0j, tk_g, fourier(piece)))
    return FiniteTensor(tuple(terms)), g


def decompose_mollified(
    f: SampledFunction, b: Bupu | None = None
) -> tuple:
    """Mollifier-translate decomposition: terms (1, T_k m, F(f phi_k)) for the
    unit-mass bump m, with synthesis window g such that m * g = 1 on
    [-1, 1]^d (hence on every window support)."""
    if b is None:
        b = make_integer_bupu(f.grid)
    grid = f.grid
    moll = bump(grid, radius=1.0, normalize="mass")
    g = plateau(grid, 2.0, 3.0)
    steps = int(round(1.0 / grid.spacing))
    from .grid import _shift_values

    terms = []
    for k in _active_lattice(f, b):
        piece = SampledFunction(grid, f.values * b.window(k).values)
        tk_m = SampledFunction(grid, _shift_values(moll.values, tuple(c_ * steps for c_ in k)))
        terms.append((1.0 + 0.0j, tk_m, fourier(piece)))
    return FiniteTensor(tuple(terms)), g


# ---------------------------------------------------------------------------
# norm evaluators and dual models


def amalgam_evaluator(spec: AmalgamSpec, b: Bupu):
    """Callable measuring first factors in the given amalgam."""

    def norm(f: SampledFunction) -> float:
        return amalgam_norm_discrete(f, spec, b).value

    return norm


def fourier_amalgam_evaluator(spec: AmalgamSpec, b: Bupu):
    """Callable measuring second factors psi by the amalgam norm of F^(-1) psi."""

    def norm(psi: SampledFunction) -> float:
        return amalgam_norm_discrete(inverse_fourier(psi), spec, b).value

    return norm


def dual_amalgam_spec(spec: AmalgamSpec) -> AmalgamSpec:
    """Discrete dual model W(E', l^q_{1/eta}) of W(E, l^p_eta).

    The vanishing sup global dualizes to l^1 with the reciprocal weight; the
    C_0 local is modelled by the weighted L^1 atom on the grid.
    """
    local = spec.local
    if isinstance(local, LpSpec):
        dual_local = LpSpec(_conjugate(local.p), _invert(local.weight))
    elif isinstance(local, FLpSpec):
        dual_local = FLpSpec(_conjugate(local.p), _invert(local.weight))
    elif isinstance(local, C0Spec):
        dual_local = LpSpec(1.0, _invert(local.weight))
    else:
        raise TypeError(f"no dual model for local {local!r}")
    gp = spec.glob.p
    dual_p = 1.0 if gp == INF0 or gp == math.inf else _conjugate(gp)
    return AmalgamSpec(dual_local, GlobalSpec(dual_p, _invert(spec.glob.weight)))


def _conjugate(p: float) -> float:
    if p == 1.0:
        return math.inf
    if p == math.inf:
        return 1.0
    return p / (p - 1.0)


def _invert(w: Weight | None) -> Weight:
    from .spaces import weight_exponent

    return PowerWeight(-weight_exponent(w))


def overlap_factor(spec: AmalgamSpec, b: Bupu) -> float:
    """Certified pairing constant: sum over |r|_inf <= 1 of the lattice
    supremum of eta(k)/eta(k+r)."""
    w = spec.glob.weight or PowerWeight(0.0)
    lattice = np.asarray(b.lattice, dtype=float)
    r_norm = np.sqrt((lattice**2).sum(axis=1))
    total = 0.0
    import itertools

    for r in itertools.product((-1, 0, 1), repeat=b.grid.dim):
        shifted = lattice + np.asarray(r, dtype=float)
        s_norm = np.sqrt((shifted**2).sum(axis=1))
        total += float(np.max(w.eval_radius(r_norm) / w.eval_radius(s_norm)))
    return total


class _DualModel:
    """Normalization recipe for one tensor factor.

    Kinds: "l2" (plain Cauchy-Schwarz pairing), "lp" with the primal
    exponent p (plain Hoelder pairing with the conjugate norm), "amalgam"
    and "fourier_amalgam" (certified discrete amalgam duality, the latter
    for functionals acting through the transform on F^(-1)-factors).
    """

    def __init__(self, kind: str, spec=None, b: Bupu | None = None):
        if kind not in ("l2", "lp", "amalgam", "fourier_amalgam"):
            raise ValueError(f"unknown dual model kind {kind!r}")
        self.kind = kind
        self.spec = spec
        self.b = b
        if kind in ("l2", "lp"):
            self.factor = 1.0
            if kind == "lp":
                self.q = _conjugate(float(spec))
        else:
            if spec is None or b is None:
                raise ValueError("amalgam dual models need a spec and a partition")
            self.dual_spec = dual_amalgam_spec(spec)
            self.factor = overlap_factor(spec, b)

    def _measure(self, f: SampledFunction) -> float:
        from .norms import lp_norm

        if self.kind == "l2":
            return f.norm2()
        if self.kind == "lp":
            return lp_norm(f, self.q)
        if self.kind == "amalgam":
            return amalgam_norm_discrete(f, self.dual_spec, self.b).value * self.factor
        return (
            amalgam_norm_discrete(fourier(f), self.dual_spec, self.b).value
            * self.factor
        )

    def normalize(self, raw: SampledFunction) -> tuple:
        """Scale so the certified pairing bound uses constant 1; returns
        (sample, reported dual norm after normalization)."""
        n = self._measure(raw)
        if n == 0.0:
            raise ValueError("degenerate dual sample")
        scaled = raw * (1.0 / n)
        return scaled, float(self._measure(scaled))


def _random_band_limited(grid: GridSpec, rng: np.random.Generator, n_freq: int = 32) -> SampledFunction:
    """Random coefficients on the lowest ``n_freq`` frequencies of the grid."""
    x = grid.axis_points()
    dxi = grid.dual().spacing
    ks = np.arange(-(n_freq // 2), n_freq // 2)
    coeff = rng.standard_normal(len(ks)) + 1j * rng.standard_normal(len(ks))
    basis = np.exp(2j * np.pi * dxi * np.outer(x, ks))
    vals = basis @ coeff
    if grid.dim == 2:
        coeff2 = rng.standard_normal(len(ks)) + 1j * rng.standard_normal(len(ks))
        vals = np.outer(vals, basis @ coeff2)
    return SampledFunction(grid, vals)


def make_dual_samples(
    count: int,
    seed: int,
    dual_model: tuple,
    xgrid: GridSpec,
    xigrid: GridSpec,
) -> list:
    """Deterministic random dual functionals, unit norm in the dual model.

    ``dual_model`` is a pair of :class:`_DualModel`-compatible descriptors:
    either the string "l2" or a tuple ("amalgam" | "fourier_amalgam",
    AmalgamSpec, Bupu). The first entry normalizes functionals on first
    factors (time grid), the second on second factors (frequency grid).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    model_a = _as_model(dual_model[0])
    model_b = _as_model(dual_model[1])
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        fa_raw = _random_band_limited(xgrid, rng)
        fb_raw = _random_band_limited(xigrid, rng)
        fa, na = model_a.normalize(fa_raw)
        fb, nb = model_b.normalize(fb_raw)
        out.append(DualSample(fa, fb, na, nb))
    return out


def aligned_dual_sample(t: FiniteTensor, dual_model: tuple) -> DualSample:
    """Dual pair aligned with the dominant term of the tensor (normalized in
    the same model, hence still a certified lower-bound functional)."""
    if t.rank == 0:
        raise ValueError("cannot align with an empty tensor")
    model_a = _as_model(dual_model[0])
    model_b = _as_model(dual_model[1])
    j = int(
        np.argmax([abs(lam) * phi.norm2() * psi.norm2() for lam, phi, psi in t.terms])
    )
    _, phi, psi = t.terms[j]
    fa, na = model_a.normalize(phi.conj())
    fb, nb = model_b.normalize(psi.conj())
    return DualSample(fa, fb, na, nb)


def _as_model(desc) -> _DualModel:
    if isinstance(desc, _DualModel):
        return desc
    if desc == "l2":
        return _DualModel("l2")
    if desc[0] == "lp":
        return _DualModel("lp", desc[1])
    kind, spec, b = desc
    return _DualModel(kind, spec, b)
