"""Numeric evaluation of space expressions on sampled functions.

Atoms and amalgams of atoms evaluate directly; composite expressions (Mod
of tensors, duals, Shubin atoms) are normalized first and the normal form
is evaluated when it is concrete. Fourier wrappers change the carrier:
||f||_{F(X)} = ||F^(-1) f||_X and conversely.
"""

from __future__ import annotations

import math

from .grid import SampledFunction
from .identify import ast as A
from .identify.engine import normalize
from .norms import (
    AmalgamSpec,
    GlobalSpec,
    INF0,
    NormResult,
    amalgam_norm_discrete,
    c0_tail_profile,
    lp_norm,
    modulation_norm,
    shubin_norm,
)
from .spaces import C0Spec, FLpSpec, LpSpec
from .transforms import fourier, inverse_fourier
from .weights import PowerWeight, RadialWeight2D, TensorWeight
from .windows import normalized_gaussian

__all__ = ["eval_space_norm", "UnsupportedSpaceError"]


class UnsupportedSpaceError(ValueError):
    """The expression has no concrete evaluation on a single function."""


def _exponent(p):
    if p == A.INF:
        return math.inf
    if p == A.INF0:
        return INF0
    return float(p)


def _local_spec(e):
    if isinstance(e, A.Lp) and not isinstance(e.p, str) and e.p != A.INF:
        return LpSpec(float(e.p), PowerWeight(e.s))
    if isinstance(e, A.Lp):
        return LpSpec(math.inf, PowerWeight(e.s))
    if isinstance(e, A.FL) and isinstance(e.inner, A.Lp):
        return FLpSpec(_exponent(e.inner.p), PowerWeight(e.inner.s))
    if isinstance(e, A.C0):
        return C0Spec(PowerWeight(e.s))
    return None


def _eval(e, f: SampledFunction) -> NormResult:
    if isinstance(e, A.Lp):
        w = PowerWeight(e.s)
        if e.p == A.INF0:
            prof = c0_tail_profile(f, w)
            return NormResult(
                lp_norm(f, math.inf, w),
                0.0,
                "direct",
                {"linf0_proxy": True, "vanishing_tail_ok": prof.vanishing_ok},
            )
        return NormResult(lp_norm(f, _exponent(e.p), w), 0.0, "direct")
    if isinstance(e, A.C0):
        w = PowerWeight(e.s)
        prof = c0_tail_profile(f, w)
        return NormResult(
            lp_norm(f, math.inf, w),
            0.0,
            "direct",
            {"vanishing_tail_ok": prof.vanishing_ok},
        )
    if isinstance(e, A.FL):
        return _eval(e.inner, inverse_fourier(f))
    if isinstance(e, A.FLinv):
        return _eval(e.inner, fourier(f))
    if isinstance(e, A.Amalgam):
        local = _local_spec(e.local)
        if local is None:
            raise UnsupportedSpaceError(
                f"amalgam local component {A.render(e.local)} is not an atom"
            )
        spec = AmalgamSpec(local, GlobalSpec(_exponent(e.gp), PowerWeight(e.gs)))
        return amalgam_norm_discrete(f, spec)
    if isinstance(e, A.Mpq):
        if isinstance(e.p, str) or isinstance(e.q, str):
            raise UnsupportedSpaceError("modulation atom needs finite or inf exponents")
        if e.w[0] == "radial":
            w2d = RadialWeight2D(e.w[1])
        else:
            w2d = TensorWeight(PowerWeight(e.w[1]), PowerWeight(e.w[2]))
        g = normalized_gaussian(f.grid)
        return modulation_norm(f, g, _exponent(e.p), _exponent(e.q), w2d)
    if isinstance(e, A.Qs):
        return shubin_norm(f, e.s)
    raise UnsupportedSpaceError(f"no concrete norm for {A.render(e)}")


def eval_space_norm(expr, f: SampledFunction) -> tuple:
    """Evaluate the norm of f in the space ``expr`` denotes.

    Returns (NormResult, normal_form, trace); composite expressions are
    normalized first and the normal form is the one evaluated.
    """
    try:
        return _eval(expr, f), expr, []
    except UnsupportedSpaceError:
        pass
    nf, trace = normalize(expr)
    if nf == expr:
        raise UnsupportedSpaceError(
            f"{A.render(expr)} does not reduce to an evaluable space"
        )
    res = _eval(nf, f)
    return res, nf, trace
