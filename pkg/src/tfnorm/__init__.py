"""tfnorm: time-frequency norms on sampled functions, amalgam and modulation
space calculators, and a symbolic engine for function-space identities."""

from .grid import GridSpec, SampledFunction, translate, modulate, boundary_mass
from .weights import (
    PowerWeight,
    ProductWeight,
    TensorWeight,
    RadialWeight2D,
    make_power_weight,
    moderation_check,
)
from .transforms import (
    fourier,
    inverse_fourier,
    convolve,
    flp_norm,
    approx_identity_gn,
    hermite_projector,
)

__all__ = [
    "GridSpec",
    "SampledFunction",
    "translate",
    "modulate",
    "boundary_mass",
    "PowerWeight",
    "ProductWeight",
    "TensorWeight",
    "RadialWeight2D",
    "make_power_weight",
    "moderation_check",
    "fourier",
    "inverse_fourier",
    "convolve",
    "flp_norm",
    "approx_identity_gn",
    "hermite_projector",
]

__version__ = "0.1.0"
