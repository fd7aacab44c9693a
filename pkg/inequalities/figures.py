"""Curve data behind the thirteen comparison figures"""
from typing import Dict, Tuple

import numpy as np
import pandas as pd

from exceptions import DomainError
from inequalities.bernstein import C_CURVES
from inequalities.polarization import D_CURVES
from models.branch_curve import BranchCurve

FIGURES: Dict[int, Tuple[str, ...]] = {
    1: ('C1', 'C6', 'C7'),
    2: ('C4', 'C5', 'C7'),
    3: ('C2', 'C3', 'C4'),
    4: ('C2', 'C4', 'C5'),
    5: ('D11', 'D21', 'D22'),
    6: ('D12', 'D31'),
    7: ('D22', 'D42'),
    8: ('D21', 'D52'),
    9: ('D21', 'D22', 'D51'),
    10: ('D6', 'D82', 'D83'),
    11: ('D71', 'D101'),
    12: ('D72', 'D101', 'D102'),
    13: ('D82', 'D83', 'D102'),
}


def get_curve(curve_id: str) -> BranchCurve:
    curve = C_CURVES.get(curve_id) or D_CURVES.get(curve_id)
    if curve is None:
        raise DomainError(f"Unknown branch curve {curve_id!r}")
    return curve


def figure_curves(n: int) -> Tuple[BranchCurve, ...]:
    if n not in FIGURES:
        raise DomainError(f"Figure number must be between 1 and {len(FIGURES)}, got {n}")
    return tuple(get_curve(curve_id) for curve_id in FIGURES[n])


def figure_frame(n: int, samples: int = 513) -> pd.DataFrame:
    """
    Sample the curves of one figure

    Args:
        n: Figure number 1..13
        samples: λ samples over the hull of the curves' domains

    Returns:
        DataFrame with a 'lambda' column and one column per curve; cells
        outside a curve's domain are NaN
    """
    if samples < 2:
        raise DomainError(f"A figure needs at least 2 samples, got {samples}")
    curves = figure_curves(n)
    lo = min(curve.lo for curve in curves)
    hi = max(curve.hi for curve in curves)
    lams = np.linspace(lo, hi, samples)

    data = {'lambda': lams}
    for curve in curves:
        values = [curve.value_or_none(float(lam)) for lam in lams]
        data[curve.id] = np.array([np.nan if v is None else v for v in values], dtype=float)
    return pd.DataFrame(data)
