"""JSON serialization of sampled functions and time-frequency arrays.

Function files: {"grid": {"dim": d, "L": half_width, "N": n},
"values": [[re, im], ...]} with values flattened in row-major order.
"""

from __future__ import annotations

import json

import numpy as np

from .grid import GridSpec, SampledFunction
from .stft import TimeFrequencyArray

__all__ = ["function_to_dict", "function_from_dict", "load_function", "save_function", "tf_to_dict"]


def _grid_to_dict(g: GridSpec) -> dict:
    return {"dim": g.dim, "L": g.half_width, "N": g.n}


def _grid_from_dict(d: dict) -> GridSpec:
    return GridSpec(int(d["dim"]), float(d["L"]), int(d["N"]))


def _values_to_list(values: np.ndarray) -> list:
    flat = values.ravel()
    return [[float(v.real), float(v.imag)] for v in flat]


def function_to_dict(f: SampledFunction) -> dict:
    return {"grid": _grid_to_dict(f.grid), "values": _values_to_list(f.values)}


def function_from_dict(d: dict) -> SampledFunction:
    grid = _grid_from_dict(d["grid"])
    pairs = np.asarray(d["values"], dtype=float)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ValueError("values must be a list of [re, im] pairs")
    return SampledFunction(grid, pairs[:, 0] + 1j * pairs[:, 1])


def load_function(path: str) -> SampledFunction:
    with open(path, "r", encoding="utf-8") as fh:
        return function_from_dict(json.load(fh))


def save_function(f: SampledFunction, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(function_to_dict(f), fh)


def tf_to_dict(tf: TimeFrequencyArray) -> dict:
    return {
        "xgrid": _grid_to_dict(tf.xgrid),
        "xigrid": _grid_to_dict(tf.xigrid),
        "values": _values_to_list(tf.values),
    }
