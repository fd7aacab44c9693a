"""
Brute-force global maximizers

Every closed form in the library is checked against these scans. They
know nothing about the formulas: a uniform grid locates the best cell and
golden-section search refines inside the bracket of its two neighbours.
"""
import logging
import math
from typing import Callable, Tuple

import numpy as np

from exceptions import NonFiniteValueError
from models.constants import QUARTER_PI
from models.poly import Poly
from models.scan_config import ScanConfig
from monitoring.metrics import count_evaluations, track_scan_operation

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def evaluate_on_grid(f: Callable, xs: np.ndarray, operation: str = 'scan') -> np.ndarray:
    """
    Evaluate f on an array of points

    f is first tried as a vectorized numpy callable; when it rejects arrays
    or returns the wrong shape it is evaluated element-wise.

    Raises:
        NonFiniteValueError: at the first point where f is not finite
    """
    try:
        values = np.asarray(f(xs), dtype=float)
        if values.shape != xs.shape:
            raise ValueError("objective is not vectorized")
    except (TypeError, ValueError):
        values = np.fromiter((f(x) for x in xs.flat), dtype=float, count=xs.size).reshape(xs.shape)

    bad = ~np.isfinite(values)
    if bad.any():
        index = np.unravel_index(np.argmax(bad), values.shape)
        raise NonFiniteValueError(xs[index].item(), values[index].item(), operation)
    return values


def _finite(value, location, operation: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NonFiniteValueError(location, value, operation)
    return value


def golden_section_maximize(f: Callable[[float], float], lo: float, hi: float,
                            iters: int, operation: str = 'golden') -> Tuple[float, float]:
    """
    Golden-section search for a maximum of f on [lo, hi]

    Args:
        f: Objective, assumed unimodal on the bracket
        lo: Lower end of the bracket
        hi: Upper end of the bracket
        iters: Number of bracket reductions

    Returns:
        Tuple of (best x, f at best x)
    """
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc = _finite(f(c), c, operation)
    fd = _finite(f(d), d, operation)

    for _ in range(iters):
        if fc < fd:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = _finite(f(d), d, operation)
        else:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = _finite(f(c), c, operation)

    count_evaluations(operation, iters + 2)
    return (c, fc) if fc >= fd else (d, fd)


def _bracket(grid: np.ndarray, index: int) -> Tuple[float, float]:
    return float(grid[max(index - 1, 0)]), float(grid[min(index + 1, grid.size - 1)])


@track_scan_operation('max_1d')
def max_1d(f: Callable, lo: float, hi: float, cfg: ScanConfig) -> Tuple[float, float]:
    """
    Maximize f on [lo, hi] by grid scan followed by golden-section refinement

    Args:
        f: Real objective; vectorized numpy callables are evaluated in one pass
        lo: Lower end
        hi: Upper end, hi >= lo
        cfg: Grid size and refinement iterations

    Returns:
        Tuple of (x*, f*) with f* >= max over the grid
    """
    grid = np.linspace(lo, hi, cfg.grid)
    values = evaluate_on_grid(f, grid, 'max_1d')
    count_evaluations('max_1d', grid.size)

    index = int(np.argmax(values))
    best_x, best_f = float(grid[index]), float(values[index])

    if cfg.refine_iters > 0 and hi > lo:
        left, right = _bracket(grid, index)
        x, fx = golden_section_maximize(f, left, right, cfg.refine_iters, 'max_1d')
        if fx > best_f:
            best_x, best_f = float(x), fx

    logger.debug("max_1d on [%r, %r] with %d samples: f*=%r at x*=%r", lo, hi, cfg.grid, best_f, best_x)
    return best_x, best_f


@track_scan_operation('max_2d')
def max_2d(f: Callable, box: Tuple[Tuple[float, float], Tuple[float, float]],
           cfg: ScanConfig, sweeps: int = 3) -> Tuple[Tuple[float, float], float]:
    """
    Maximize f(u, v) on a box by grid scan and coordinate-wise golden sections

    Args:
        f: Objective of two variables; f(U, V) on meshgrid arrays is tried first
        box: ((lo1, hi1), (lo2, hi2))
        cfg: Grid size per axis and golden iterations per coordinate step
        sweeps: Alternating coordinate refinements

    Returns:
        Tuple of ((u*, v*), f*) with f* >= max over the grid
    """
    (lo1, hi1), (lo2, hi2) = box
    us = np.linspace(lo1, hi1, cfg.grid)
    vs = np.linspace(lo2, hi2, cfg.grid)
    uu, vv = np.meshgrid(us, vs, indexing='ij')

    try:
        values = np.asarray(f(uu, vv), dtype=float)
        if values.shape != uu.shape:
            raise ValueError("objective is not vectorized")
    except (TypeError, ValueError):
        values = np.array([[f(u, v) for v in vs] for u in us], dtype=float)
    count_evaluations('max_2d', values.size)

    bad = ~np.isfinite(values)
    if bad.any():
        i, j = np.unravel_index(np.argmax(bad), values.shape)
        raise NonFiniteValueError((float(us[i]), float(vs[j])), float(values[i, j]), 'max_2d')

    i, j = np.unravel_index(int(np.argmax(values)), values.shape)
    best_u, best_v, best_f = float(us[i]), float(vs[j]), float(values[i, j])

    if cfg.refine_iters > 0:
        u_lo, u_hi = _bracket(us, i)
        v_lo, v_hi = _bracket(vs, j)
        u, v = best_u, best_v
        for _ in range(sweeps):
            u, _ = golden_section_maximize(lambda s: f(s, v), u_lo, u_hi, cfg.refine_iters, 'max_2d')
            v, fv = golden_section_maximize(lambda s: f(u, s), v_lo, v_hi, cfg.refine_iters, 'max_2d')
            if fv > best_f:
                best_u, best_v, best_f = float(u), float(v), fv

    logger.debug("max_2d on %r with %d^2 samples: f*=%r", box, cfg.grid, best_f)
    return (best_u, best_v), best_f


def numeric_poly_norm(p: Poly, cfg: ScanConfig) -> float:
    """
    Sup-norm of p over the arc by brute force

    Args:
        p: Polynomial
        cfg: Oracle resolution

    Returns:
        max over θ in [0, π/4] of |p(cos θ, sin θ)|
    """
    _, value = max_1d(lambda theta: np.abs(p.eval(np.cos(theta), np.sin(theta))), 0.0, QUARTER_PI, cfg)
    return value
