"""Brute-force grid minimizers used to cross-check the solvers.

Nothing here shares code with the analytic solvers.  Both oracles evaluate
the raw objective on a square grid over the inflated bounding box and then
repeatedly halve the window around the incumbent.  Ties on a grid go to the
smallest linear index, and the incumbent only moves on a strict improvement,
so runs are deterministic whether or not the evaluation is chunked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import EmptyInput


@dataclass(frozen=True)
class OracleSettings:
    resolution: int = 64
    rounds: int = 24
    parallel: bool = False

    def __post_init__(self):
        if self.resolution < 8:
            raise ValueError("resolution must be at least 8")
        if self.rounds < 1:
            raise ValueError("rounds must be at least 1")


def _evaluate(obj, xs: np.ndarray, ys: np.ndarray, parallel: bool) -> np.ndarray:
    grid = xs[None, :] + 1j * ys[:, None]
    if not parallel:
        return obj(grid.ravel())
    # chunked evaluation; the reduction order below never depends on it
    flat = grid.ravel()
    chunks = max(1, len(flat) // 4096)
    return np.concatenate([obj(part) for part in np.array_split(flat, chunks)])


def _refine(
    obj,
    points: Sequence[complex],
    settings: OracleSettings,
    trace: Optional[list] = None,
):
    pts = np.asarray(points, dtype=complex)
    res = settings.resolution
    xlo, xhi = pts.real.min(), pts.real.max()
    ylo, yhi = pts.imag.min(), pts.imag.max()
    cx, cy = 0.5 * (xlo + xhi), 0.5 * (ylo + yhi)
    # inflate the bounding box by half its extent on each side
    half = 0.75 * max(xhi - xlo, yhi - ylo)
    best_w = complex(cx, cy)
    best_val = float(obj(np.array([best_w]))[0])
    for _ in range(settings.rounds):
        xs = np.linspace(cx - half, cx + half, res)
        ys = np.linspace(cy - half, cy + half, res)
        vals = _evaluate(obj, xs, ys, settings.parallel)
        k = int(np.argmin(vals))
        val = float(vals[k])
        if val < best_val:
            best_val = val
            best_w = complex(xs[k % res], ys[k // res])
        cx, cy = best_w.real, best_w.imag
        if trace is not None:
            cell = 2.0 * half / (res - 1) if half > 0.0 else 0.0
            trace.append((best_w, best_val, cell))
        half *= 0.5
    return best_w, best_val


def oracle_ft(config, settings: Optional[OracleSettings] = None, trace=None):
    """Grid minimizer of the weighted sum of distances.

    Accepts anything with ``points`` and ``weights`` attributes.  Returns
    (location, objective).
    """
    if settings is None:
        settings = OracleSettings()
    pts = np.asarray(config.points, dtype=complex)
    wts = np.asarray(config.weights, dtype=float)
    if pts.size == 0:
        raise EmptyInput("no points")

    def obj(ws: np.ndarray) -> np.ndarray:
        return np.abs(ws[:, None] - pts[None, :]) @ wts

    return _refine(obj, pts, settings, trace)


def oracle_cheby(
    points: Sequence[complex],
    weights: Optional[Sequence[float]] = None,
    settings: Optional[OracleSettings] = None,
    trace=None,
):
    """Grid minimizer of the (weighted) farthest distance.

    Returns (location, radius).
    """
    if settings is None:
        settings = OracleSettings()
    pts = np.asarray(points, dtype=complex)
    if pts.size == 0:
        raise EmptyInput("no points")
    if weights is None:
        wts = np.ones(len(pts))
    else:
        wts = np.asarray(weights, dtype=float)

    def obj(ws: np.ndarray) -> np.ndarray:
        return (np.abs(ws[:, None] - pts[None, :]) * wts[None, :]).max(axis=1)

    return _refine(obj, pts, settings, trace)
