"""
Sharp bound Ψ on the sector norm of the differential DP(x, y) and the
polarization constant of the space

On the ray (1, λ) the supremum of ‖DP(1, λ)‖ over each family reduces to
one of the branch curves D11..D102; the bound at (x, y) is 2x·D(y/x).
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from exceptions import DomainError
from models.bilinear_form import SymBilinearForm
from models.branch_curve import BranchCurve, CurveRelation
from models.constants import POLARIZATION_CONSTANT, QUARTER_PI, S_MAX, S_MIN, SQRT2, T_MAX, T_MIN
from models.extremal_param import ExtremalParam, Family, q_family
from models.linear_form import sup_linear
from models.poly import Poly
from models.scan_config import ScanConfig
from models.sector_point import SectorPoint
from oracle.search import max_2d
from repositories.extremal_repository import ScanResult, scan_extremes

logger = logging.getLogger(__name__)

# Region boundaries of Ψ in λ = y/x
LAMBDA_Q_START = (2 * SQRT2 - 1) / 7
LAMBDA_P_START = SQRT2 - 1
LAMBDA_LINEAR_START = 2 - SQRT2

# Where the P-family and Q-family suprema change branch
LAMBDA_P_SWITCH = ((2 - 3 * SQRT2) * math.sqrt(4 * SQRT2 + 7) + 5 * SQRT2 + 6) / 14
LAMBDA_Q_SWITCH = ((4 * SQRT2 - 5) * math.sqrt(4 * SQRT2 + 7) + 8 - 5 * SQRT2) / 7

_D52_A = 69 + 48 * SQRT2
_D52_B = 56 + 40 * SQRT2
_D52_C = 13 + 8 * SQRT2


def d_sqrt(lam):
    return math.sqrt(1 + lam * lam)


def d12(lam):
    return (39 * lam * lam - 26 * lam + 7) / (2 * math.sqrt(74 * lam * lam - 52 * lam + 10))


def d21(lam):
    return 1 + lam * lam / (1 - lam)


def d_steep(lam):
    return (2 + 2 * SQRT2) * lam - 1


def d_falling(lam):
    return SQRT2 / 2 * (1 + 2 * SQRT2 - (3 + 2 * SQRT2) * lam)


def d_rising(lam):
    return SQRT2 / 2 * (3 * lam - 1)


def d52(lam):
    return math.sqrt(_D52_A * lam * lam - _D52_B * lam + _D52_C)


def d_drop(lam):
    return 1 - 2 * lam


def d72(lam):
    return SQRT2 / 2 * (1 + lam)


def d102(lam):
    return SQRT2 * (1 + 3 * lam * lam) / (4 * lam)


def _curve(id_, formula, lo, hi, lo_open=False, hi_open=False):
    return BranchCurve(id=id_, lo=lo, hi=hi, formula=formula, lo_open=lo_open, hi_open=hi_open)


_D5_FIRST_END = (3 + 4 * SQRT2) / 23
_D5_LAST_START = (6 - 2 * SQRT2) / 7

D_CURVES: Dict[str, BranchCurve] = {curve.id: curve for curve in (
    _curve('D11', d_sqrt, 0.0, 1.0),
    _curve('D12', d12, 0.0, 0.2, lo_open=True, hi_open=True),
    _curve('D21', d21, 0.0, 2 - SQRT2, hi_open=True),
    _curve('D22', d_steep, 2 - SQRT2, 1.0),
    _curve('D31', d_falling, 0.0, (2 * SQRT2 + 1) / 7, hi_open=True),
    _curve('D32', d_rising, (2 * SQRT2 + 1) / 7, 1.0),
    _curve('D41', lambda lam: 1.0, 0.0, (1 + SQRT2) / 3, hi_open=True),
    _curve('D42', d_rising, (1 + SQRT2) / 3, 1.0),
    _curve('D51', d_falling, 0.0, _D5_FIRST_END, hi_open=True),
    _curve('D52', d52, _D5_FIRST_END, _D5_LAST_START, hi_open=True),
    _curve('D53', d_steep, _D5_LAST_START, 1.0),
    _curve('D6', d_sqrt, SQRT2 - 1, 1.0, lo_open=True, hi_open=True),
    _curve('D71', d_drop, 0.0, (5 - 3 * SQRT2) / 7, hi_open=True),
    _curve('D72', d72, (5 - 3 * SQRT2) / 7, 1.0),
    _curve('D81', d_falling, 0.0, _D5_FIRST_END, hi_open=True),
    _curve('D82', d52, _D5_FIRST_END, _D5_LAST_START, hi_open=True),
    _curve('D83', d_steep, _D5_LAST_START, 1.0),
    _curve('D91', d_drop, 0.0, (2 - SQRT2) / 2, hi_open=True),
    _curve('D92', d_steep, (2 - SQRT2) / 2, 1.0),
    _curve('D101', d_falling, 0.0, LAMBDA_Q_START, hi_open=True),
    _curve('D102', d102, LAMBDA_Q_START, 1.0),
)}


D_RELATIONS = (
    CurveRelation(('D11',), ('D21', 'D22'), ((0.0, 1.0),)),
    CurveRelation(('D12',), ('D31',), ((0.0, 0.2),)),
    CurveRelation(('D41',), ('D21', 'D22'), ((0.0, (1 + SQRT2) / 3),)),
    CurveRelation(('D42',), ('D22',), (((1 + SQRT2) / 3, 1.0),)),
    CurveRelation(('D52',), ('D21',), ((_D5_FIRST_END, _D5_LAST_START),)),
    CurveRelation(('D6',), ('D82', 'D83'), ((SQRT2 - 1, 1.0),)),
    CurveRelation(('D71',), ('D101', 'D102'), ((0.0, (5 - 3 * SQRT2) / 7),)),
    CurveRelation(('D72',), ('D101', 'D102'), (((5 - 3 * SQRT2) / 7, 1.0),)),
    CurveRelation(('D82',), ('D102',), ((_D5_FIRST_END, _D5_LAST_START),)),
    # past the Q-family switch D83 is the larger one
    CurveRelation(('D83',), ('D102',), ((_D5_LAST_START, LAMBDA_Q_SWITCH),)),
    CurveRelation(('D81',), ('D101',), ((0.0, LAMBDA_Q_START),), identity=True),
    CurveRelation(('D91',), ('D71',), ((0.0, (5 - 3 * SQRT2) / 7),), identity=True),
    CurveRelation(('D92',), ('D83',), ((_D5_LAST_START, 1.0),), identity=True),
    CurveRelation(('D31',), ('D51',), ((0.0, _D5_FIRST_END),), identity=True),
    CurveRelation(('D32',), ('D42',), (((1 + SQRT2) / 3, 1.0),), identity=True),
)


def branch_curve_d(curve_id: str, lam: float) -> float:
    """
    Evaluate a D-curve at λ

    Raises:
        DomainError: unknown id or λ outside the curve's domain
    """
    try:
        curve = D_CURVES[curve_id.upper()]
    except KeyError:
        raise DomainError(f"Unknown branch curve {curve_id!r}") from None
    return curve.value_at(lam)


def differential_norm(p: Poly, pt: SectorPoint) -> float:
    """
    Sector norm of the linear form DP(x, y)

    Args:
        p: Polynomial
        pt: Point of the sector

    Returns:
        sup over the arc of |∂P/∂x(pt)·cos θ + ∂P/∂y(pt)·sin θ|
    """
    gx, gy = p.gradient(pt)
    return sup_linear(gx, gy)


def psi_branch(pt: SectorPoint) -> int:
    """Index 1..4 of the Ψ region containing pt; half-open on the right"""
    pt.require_not_origin()
    lam = pt.ratio
    if lam < LAMBDA_Q_START:
        return 1
    if lam < LAMBDA_P_START:
        return 2
    if lam < LAMBDA_LINEAR_START:
        return 3
    return 4


def psi(pt: SectorPoint) -> float:
    """
    Sharp bound on ‖DP(x, y)‖ for ‖P‖ <= 1

    Args:
        pt: Point of the sector other than the origin

    Returns:
        The piecewise value; homogeneous of degree 1
    """
    branch = psi_branch(pt)
    return pt.x * _psi_on_ray(branch, pt.ratio)


def _psi_on_ray(branch: int, lam: float) -> float:
    # Ψ at (1, λ); the caller restores the scale
    if branch == 1:
        return SQRT2 * ((1 + 2 * SQRT2) - (3 + 2 * SQRT2) * lam)
    if branch == 2:
        return SQRT2 * (1 + 3 * lam * lam) / (2 * lam)
    if branch == 3:
        return 2 * (1 + lam * lam / (1 - lam))
    return 4 * (1 + SQRT2) * lam - 2


def psi_witness(pt: SectorPoint) -> ExtremalParam:
    """
    Extreme polynomial attaining Ψ at pt

    Returns:
        P at t=1 on the outer regions, Q at s0 = (1+λ)²/(2λ²) − 1 on the
        second, P at t = λ²/(1−λ)² − 1 on the third
    """
    branch = psi_branch(pt)
    lam = pt.ratio
    if branch == 2:
        s0 = (1 + lam) ** 2 / (2 * lam * lam) - 1
        return ExtremalParam(Family.Q, s=min(max(s0, S_MIN), S_MAX))
    if branch == 3:
        t = lam * lam / (1 - lam) ** 2 - 1
        return ExtremalParam(Family.P, t=min(max(t, T_MIN), T_MAX))
    return ExtremalParam(Family.P, t=T_MAX)


def psi_p_family(pt: SectorPoint) -> float:
    """Closed-form sup of ‖DP_t(x, y)‖ over the P family alone"""
    pt.require_not_origin()
    lam = pt.ratio
    if lam < LAMBDA_P_SWITCH:
        value = d_falling(lam)
    elif lam < LAMBDA_LINEAR_START:
        value = d21(lam)
    else:
        value = d_steep(lam)
    return 2 * pt.x * value


def psi_q_family(pt: SectorPoint) -> float:
    """Closed-form sup of ‖DQ_s(x, y)‖ over the Q family alone"""
    pt.require_not_origin()
    lam = pt.ratio
    if lam < LAMBDA_Q_START:
        value = d_falling(lam)
    elif lam < LAMBDA_Q_SWITCH:
        value = d102(lam)
    else:
        value = d_steep(lam)
    return 2 * pt.x * value


def psi_oracle(pt: SectorPoint, resolution: int = 2048, refine_iters: int = 60) -> ScanResult:
    """Brute-force Ψ at pt over the extreme points"""
    return scan_extremes(lambda p: differential_norm(p, pt), resolution, refine_iters)


def continuity_gaps() -> Dict[float, float]:
    """
    Gap between adjacent Ψ formulas at each region boundary, on the ray (1, λ)

    Returns:
        Mapping λ -> |2·left − 2·right|
    """
    pairs = (
        (LAMBDA_Q_START, d_falling, d102),
        (LAMBDA_P_START, d102, d21),
        (LAMBDA_LINEAR_START, d21, d_steep),
    )
    return {lam: 2 * abs(left(lam) - right(lam)) for lam, left, right in pairs}


@dataclass(frozen=True)
class PsiMaximum:
    """Maximum of Ψ over the unit arc"""
    value: float
    theta: float
    maximizers: List[float] = field(default_factory=list)


def psi_max(resolution: int = 513) -> PsiMaximum:
    """
    Maximize Ψ over the unit arc on a uniform θ-grid

    Args:
        resolution: Number of θ samples in [0, π/4], endpoints included

    Returns:
        PsiMaximum with the last maximizing θ and every θ within 1e-12
        (relative) of the maximum
    """
    if resolution < 2:
        raise DomainError(f"Resolution must be at least 2, got {resolution}")
    thetas = np.linspace(0.0, QUARTER_PI, resolution)
    values = np.array([psi(SectorPoint.from_angle(float(theta))) for theta in thetas])
    best = float(values.max())
    close = np.flatnonzero(values >= best - 1e-12 * max(1.0, abs(best)))
    maximizers = [float(thetas[i]) for i in close]
    logger.debug("psi_max over %d angles: %r at %s", resolution, best, maximizers)
    return PsiMaximum(best, maximizers[-1], maximizers)


def bilinear_sup_norm(form: SymBilinearForm, resolution: int = 512, refine_iters: int = 40) -> float:
    """
    Sup-norm of a symmetric bilinear form over the product of two sectors

    Args:
        form: The bilinear form L
        resolution: Grid size per angle
        refine_iters: Golden-section iterations per coordinate step

    Returns:
        max over (θ, φ) in [0, π/4]² of |L((cos θ, sin θ), (cos φ, sin φ))|
    """
    if form.is_zero:
        return 0.0
    cfg = ScanConfig(grid=resolution, refine_iters=refine_iters)

    def objective(theta, phi):
        return np.abs(form.apply(np.cos(theta), np.sin(theta), np.cos(phi), np.sin(phi)))

    _, value = max_2d(objective, ((0.0, QUARTER_PI), (0.0, QUARTER_PI)), cfg)
    return float(value)


@dataclass(frozen=True)
class PolarizationConstant:
    """Sharp constant K in ‖L‖ <= K·‖P‖, with an optional bilinear cross-check"""
    value: float
    witness: Poly
    oracle: Optional[float] = None


def polarization_constant(resolution: Optional[int] = None, refine_iters: int = 40,
                          arc_samples: int = 513) -> PolarizationConstant:
    """
    The polarization constant of the space

    Args:
        resolution: When given, also compute ‖L‖/‖P‖ for the witness's polar
            on a grid of this size
        refine_iters: Golden-section iterations of that cross-check
        arc_samples: θ samples used to maximize Ψ

    Returns:
        PolarizationConstant with value ½·max Ψ = 2+√2/2
    """
    value = 0.5 * psi_max(arc_samples).value
    witness = q_family(S_MAX)
    oracle = None
    if resolution is not None:
        oracle = bilinear_sup_norm(witness.polar(), resolution, refine_iters) / witness.sector_norm()
        logger.info("Polarization constant %r, bilinear cross-check %r (reference %r)",
                    value, oracle, POLARIZATION_CONSTANT)
    return PolarizationConstant(value, witness, oracle)
