import logging
from functools import lru_cache
from typing import Callable, NamedTuple, Optional, Tuple

import numpy as np

from exceptions import DomainError, NonFiniteValueError
from models.constants import S_MAX, S_MIN, T_MAX, T_MIN
from models.extremal_param import ExtremalParam, Family, p_family, q_family
from models.poly import Poly
from monitoring.metrics import count_evaluations, track_scan_operation
from oracle.search import golden_section_maximize

logger = logging.getLogger(__name__)

# Values closer than this (relative) count as ties; the earlier candidate wins.
TIE_TOLERANCE = 1e-12

_RANGES = {
    Family.P: (T_MIN, T_MAX),
    Family.Q: (S_MIN, S_MAX),
}

_BUILDERS = {
    Family.P: p_family,
    Family.Q: q_family,
}


class ScanResult(NamedTuple):
    """Maximum of a functional over the extreme points and where it is attained"""
    value: float
    argmax: ExtremalParam


@lru_cache(maxsize=8)
def _family_grid(family: Family, resolution: int) -> Tuple[np.ndarray, Tuple[Poly, ...], Tuple[Poly, ...]]:
    lo, hi = _RANGES[family]
    params = np.linspace(lo, hi, resolution)
    positive = tuple(_BUILDERS[family](float(x)) for x in params)
    negative = tuple(-poly for poly in positive)
    return params, positive, negative


def _make_param(family: Family, value: float, sign: int) -> ExtremalParam:
    if family is Family.P:
        return ExtremalParam(Family.P, t=value, sign=sign)
    return ExtremalParam(Family.Q, s=value, sign=sign)


class ExtremalRepository:
    """Repository serving the extreme points of the unit ball of the space"""

    def __init__(self, resolution: int = 2048, refine_iters: int = 60):
        """
        Initialize the repository

        Args:
            resolution: Grid size used for each family when scanning
            refine_iters: Golden-section iterations around the best grid cell
        """
        if resolution < 2:
            raise DomainError(f"Resolution must be at least 2, got {resolution}")
        if refine_iters < 0:
            raise DomainError(f"Refinement iterations must be >= 0, got {refine_iters}")
        self.resolution = resolution
        self.refine_iters = refine_iters

    def _scan_family(self, f: Callable[[Poly], float], family: Family, sign: int) -> Tuple[float, ExtremalParam]:
        params, positive, negative = _family_grid(family, self.resolution)
        polys = positive if sign > 0 else negative
        values = np.fromiter((f(poly) for poly in polys), dtype=float, count=len(polys))
        count_evaluations('scan_extremes', len(polys))

        bad = ~np.isfinite(values)
        if bad.any():
            index = int(np.argmax(bad))
            raise NonFiniteValueError(str(_make_param(family, float(params[index]), sign)),
                                      float(values[index]), 'scan_extremes')

        index = int(np.argmax(values))
        best_x, best_f = float(params[index]), float(values[index])

        if self.refine_iters > 0:
            left = float(params[max(index - 1, 0)])
            right = float(params[min(index + 1, params.size - 1)])
            build = _BUILDERS[family]
            x, fx = golden_section_maximize(lambda v: f(sign * build(v)), left, right,
                                            self.refine_iters, 'scan_extremes')
            if fx > best_f:
                best_x, best_f = float(x), fx

        return best_f, _make_param(family, best_x, sign)

    def scan_family(self, f: Callable[[Poly], float], family: Family) -> ScanResult:
        """
        Maximize a functional over ±members of one family

        Args:
            f: Functional Poly -> real
            family: Family.P or Family.Q
        """
        if family is Family.CORNER:
            raise DomainError("The corner is a single point; use scan()")
        best = self._scan_family(f, family, 1)
        negative = self._scan_family(f, family, -1)
        if negative[0] > best[0] + TIE_TOLERANCE * max(1.0, abs(best[0])):
            best = negative
        return ScanResult(*best)

    @track_scan_operation('scan_extremes')
    def scan(self, f: Callable[[Poly], float]) -> ScanResult:
        """
        Maximize a functional over ±P_t, ±Q_s and ±(1,1,0)

        Args:
            f: Functional defined on the unit sphere of the space

        Returns:
            ScanResult(value, argmax); ties go to the first family in the
            order P, Q, CORNER, then the + sign, then the smaller parameter
        """
        best: Optional[Tuple[float, ExtremalParam]] = None

        def consider(value: float, param: ExtremalParam):
            nonlocal best
            if best is None or value > best[0] + TIE_TOLERANCE * max(1.0, abs(best[0])):
                best = (value, param)

        for family in (Family.P, Family.Q):
            for sign in (1, -1):
                consider(*self._scan_family(f, family, sign))

        for sign in (1, -1):
            param = ExtremalParam(Family.CORNER, sign=sign)
            value = float(f(param.to_poly()))
            if not np.isfinite(value):
                raise NonFiniteValueError(str(param), value, 'scan_extremes')
            consider(value, param)
        count_evaluations('scan_extremes', 2)

        logger.debug("scan_extremes at resolution %d: max %r at %s", self.resolution, best[0], best[1])
        return ScanResult(best[0], best[1])


@lru_cache(maxsize=16)
def get_repository(resolution: int = 2048, refine_iters: int = 60) -> ExtremalRepository:
    """Shared repository per (resolution, refine_iters)"""
    return ExtremalRepository(resolution, refine_iters)


def scan_extremes(f: Callable[[Poly], float], resolution: int = 2048, refine_iters: int = 60) -> ScanResult:
    """
    Krein–Milman scan: maximize a continuous convex functional over the extreme points

    Args:
        f: Functional Poly -> real
        resolution: Grid size per family, at least 2
        refine_iters: Golden-section iterations around the best grid cell

    Returns:
        ScanResult(value, argmax)
    """
    return get_repository(resolution, refine_iters).scan(f)
