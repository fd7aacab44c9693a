"""
Pointwise Bernstein bound on the Euclidean gradient norm and the Markov constant

Candidate suprema of ‖∇P(x, y)‖₂² over the extreme polynomials are the
branch curves C1..C8; each is the squared gradient norm of one critical
member of the P or Q family, written homogeneously in (x, y). With
u = √(1+t) and v = √(2(1+s)) the critical members are

    u1 = 2y/(x−y)            t1 = (3y²+2xy−x²)/(x−y)²      0 <= y <= (√2−1)x
    u2 = (3y−x)/(2(x−y))     t2 = (5y²+2xy−3x²)/(4(x−y)²)  x/3 <= y <= (4√2−5)x
    v1 = x/y                 s1 = (x²−2y²)/(2y²)           (√2−1)x/2 <= y <= x/2
    v2 = 2x/y                s2 = (2x²−y²)/y²              y >= (√2−1)x

and the family ends t = −1, t = 1, s = 1, s = 5+4√2.
"""
import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from exceptions import DomainError
from models.branch_curve import BranchCurve, CurveRelation
from models.constants import MARKOV_LINEAR, MARKOV_SQUARED, QUARTER_PI, S_MAX, S_MIN, SQRT2, T_MAX, T_MIN
from models.extremal_param import ExtremalParam, Family, q_family
from models.poly import Poly
from models.scan_config import ScanConfig
from models.sector_point import SectorPoint
from repositories.extremal_repository import ScanResult, scan_extremes

# Region boundaries of Φ in λ = y/x
LAMBDA_C5_START = (SQRT2 - 1) / 2
LAMBDA_C2_START = SQRT2 - 1
LAMBDA_C2_END = 4 * SQRT2 - 5

_C4_XX = 13 + 8 * SQRT2
_C4_YY = 69 + 48 * SQRT2
_C4_XY = 2 * (28 + 20 * SQRT2)


def c1(x, y):
    return 4 * (x * x + y * y)


def c2(x, y):
    return (3 * x * x - 2 * x * y + 3 * y * y) ** 2 / (2 * (x - y) ** 2)


def c3(x, y):
    return 4 * (x * x + 9 * y * y)


def c4(x, y):
    return 4 * (_C4_XX * x * x + _C4_YY * y * y - _C4_XY * x * y)


def c5(x, y):
    return x ** 4 / (y * y) + 4 * (x * x + y * y)


def c6(x, y):
    return 4 * (x * x + y * y)


def c7(x, y):
    return 4 * (x * x + y * y) + 16 * (x - y) ** 2


def c8(x, y):
    # Q at s = 5+4√2 expanded the other way round; identical to c4
    k = 12 + 8 * SQRT2
    return k * (4 * x * x + k * y * y - (8 + 8 * SQRT2) * x * y) + 4 * (x * x + y * y)


def _curve(id_, formula, lo, hi, description):
    return BranchCurve(id=id_, lo=lo, hi=hi, formula=lambda lam: formula(1.0, lam), description=description)


C_CURVES: Dict[str, BranchCurve] = {
    'C1': _curve('C1', c1, 0.0, SQRT2 - 1, 'P at t1'),
    'C2': _curve('C2', c2, 1 / 3, 4 * SQRT2 - 5, 'P at t2'),
    'C3': _curve('C3', c3, 0.0, 1.0, 'P at t=-1'),
    'C4': _curve('C4', c4, 0.0, 1.0, 'P at t=1'),
    'C5': _curve('C5', c5, (SQRT2 - 1) / 2, 0.5, 'Q at s1'),
    'C6': _curve('C6', c6, SQRT2 - 1, 1.0, 'Q at s2'),
    'C7': _curve('C7', c7, 0.0, 1.0, 'Q at s=1'),
    'C8': _curve('C8', c8, 0.0, 1.0, 'Q at s=5+4√2'),
}


def branch_curve_c(curve_id: str, lam: float) -> float:
    """
    Evaluate a C-curve at (1, λ)

    Args:
        curve_id: One of 'C1'..'C8'
        lam: λ inside the curve's domain

    Raises:
        DomainError: unknown id or λ outside the domain
    """
    try:
        curve = C_CURVES[curve_id.upper()]
    except KeyError:
        raise DomainError(f"Unknown branch curve {curve_id!r}") from None
    return curve.value_at(lam)


def gradient_norm_squared(p: Poly, pt: SectorPoint) -> float:
    gx, gy = p.gradient(pt)
    return gx * gx + gy * gy


def phi_branch(pt: SectorPoint) -> str:
    """
    Name of the C-curve that gives Φ² at pt

    Closed regions overlap at their ends; the first listed branch (C4, then
    C5, then C2) owns the shared boundary, so y = x always falls to C4.
    """
    pt.require_not_origin()
    lam = pt.ratio
    if lam <= LAMBDA_C5_START or lam >= LAMBDA_C2_END:
        return 'C4'
    if lam <= LAMBDA_C2_START:
        return 'C5'
    return 'C2'


_BRANCH_FORMULAS = {'C4': c4, 'C5': c5, 'C2': c2}


def phi_squared(pt: SectorPoint) -> float:
    """
    Sharp bound on ‖∇P(x, y)‖₂² for ‖P‖ <= 1

    Args:
        pt: Point of the sector other than the origin

    Returns:
        The piecewise value; homogeneous of degree 2
    """
    return pt.x * pt.x * _phi_squared_on_ray(pt)


def _phi_squared_on_ray(pt: SectorPoint) -> float:
    # Φ² at (1, λ); the caller restores the scale
    return float(_BRANCH_FORMULAS[phi_branch(pt)](1.0, pt.ratio))


def phi(pt: SectorPoint) -> float:
    """
    Sharp multiplier in ‖∇P(x, y)‖₂ <= Φ(x, y)·‖P‖

    Returns:
        √(phi_squared(pt)); homogeneous of degree 1
    """
    return pt.x * math.sqrt(_phi_squared_on_ray(pt))


@dataclass(frozen=True)
class CriticalParameters:
    """Interior critical parameters of the families at λ, None when inadmissible"""
    t1: Optional[float]
    t2: Optional[float]
    s1: Optional[float]
    s2: Optional[float]


def critical_parameters(lam: float) -> CriticalParameters:
    """
    Critical members of the P and Q families for ‖∇P(1, λ)‖₂²

    Args:
        lam: λ in [0, 1]
    """
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"λ={lam} outside [0, 1]")

    t1 = t2 = s1 = s2 = None
    if lam <= SQRT2 - 1:
        t1 = (3 * lam * lam + 2 * lam - 1) / (1 - lam) ** 2
    if 1 / 3 <= lam <= 4 * SQRT2 - 5:
        t2 = (5 * lam * lam + 2 * lam - 3) / (4 * (1 - lam) ** 2)
    if (SQRT2 - 1) / 2 <= lam <= 0.5:
        s1 = (1 - 2 * lam * lam) / (2 * lam * lam)
    if lam >= SQRT2 - 1:
        s2 = (2 - lam * lam) / (lam * lam)
    return CriticalParameters(t1, t2, s1, s2)


def _clip(value: float, lo: float, hi: float) -> float:
    return min(max(value, lo), hi)


def phi_witness(pt: SectorPoint) -> ExtremalParam:
    """
    Extreme polynomial attaining Φ at pt

    Returns:
        P at t=1 on the C4 branch, Q at s1 on the C5 branch, P at t2 on the C2 branch
    """
    branch = phi_branch(pt)
    lam = pt.ratio
    if branch == 'C4':
        return ExtremalParam(Family.P, t=T_MAX)
    if branch == 'C5':
        s1 = (1 - 2 * lam * lam) / (2 * lam * lam)
        return ExtremalParam(Family.Q, s=_clip(s1, S_MIN, S_MAX))
    t2 = (5 * lam * lam + 2 * lam - 3) / (4 * (1 - lam) ** 2)
    return ExtremalParam(Family.P, t=_clip(t2, T_MIN, T_MAX))


def phi_oracle(pt: SectorPoint, resolution: int = 2048, refine_iters: int = 60) -> ScanResult:
    """Brute-force Φ² at pt: maximum of ‖∇P(pt)‖₂² over the extreme points"""
    return scan_extremes(lambda p: gradient_norm_squared(p, pt), resolution, refine_iters)


@dataclass(frozen=True)
class MarkovConstant:
    """Sharp global constant of the gradient inequality"""
    squared: float
    linear: float
    witness: Poly


def markov_constant() -> MarkovConstant:
    """
    The Markov constant of the space

    Returns:
        squared = 52+32√2, linear = √(52+32√2), witness (1, 5+4√2, −4−4√2)
    """
    return MarkovConstant(MARKOV_SQUARED, MARKOV_LINEAR, q_family(S_MAX))


def markov_profile(thetas) -> np.ndarray:
    """Φ² along the arc at the given angles"""
    return np.array([phi_squared(SectorPoint.from_angle(theta)) for theta in thetas], dtype=float)


def _arc_angles(theta_samples: int) -> np.ndarray:
    cfg = ScanConfig(grid=theta_samples, refine_iters=0)
    return np.linspace(0.0, QUARTER_PI, cfg.grid)


def markov_profile_max(theta_samples: int = 64) -> Tuple[float, float]:
    """
    Maximum of Φ² along a uniform θ-grid on [0, π/4], endpoints included

    Returns:
        Tuple of (maximum, first θ attaining it)
    """
    thetas = _arc_angles(theta_samples)
    profile = markov_profile(thetas)
    index = int(np.argmax(profile))
    return float(profile[index]), float(thetas[index])


@dataclass(frozen=True)
class MarkovOracleResult:
    squared: float
    theta: float
    argmax: ExtremalParam
    profile_max: float

    @property
    def linear(self) -> float:
        return math.sqrt(self.squared)


def markov_oracle(theta_samples: int = 64, resolution: int = 2048, refine_iters: int = 60) -> MarkovOracleResult:
    """
    Global brute-force maximum of ‖∇P(cos θ, sin θ)‖₂² over θ and the extreme points

    Args:
        theta_samples: Uniform θ-grid on [0, π/4], endpoints included
        resolution: Extreme-point grid per family
        refine_iters: Golden-section iterations of each extreme-point scan

    Returns:
        MarkovOracleResult with the first θ attaining the maximum and the
        closed-form profile maximum over the same θ-grid
    """
    profile_max, _ = markov_profile_max(theta_samples)
    best = None
    for theta in _arc_angles(theta_samples):
        result = phi_oracle(SectorPoint.from_angle(float(theta)), resolution, refine_iters)
        if best is None or result.value > best.squared * (1 + 1e-12):
            best = MarkovOracleResult(result.value, float(theta), result.argmax, profile_max)
    return best


def continuity_gaps() -> Dict[float, float]:
    """
    Gap between the adjacent Φ² formulas at each region boundary

    Returns:
        Mapping λ -> |left formula − right formula| at (1, λ)
    """
    pairs = (
        (LAMBDA_C5_START, c4, c5),
        (LAMBDA_C2_START, c5, c2),
        (LAMBDA_C2_END, c2, c4),
    )
    return {lam: abs(left(1.0, lam) - right(1.0, lam)) for lam, left, right in pairs}


C_RELATIONS = (
    CurveRelation(('C1',), ('C7',), ((0.0, SQRT2 - 1),)),
    CurveRelation(('C6',), ('C7',), ((SQRT2 - 1, 1.0),)),
    CurveRelation(('C7',), ('C4',), ((0.0, (2 - SQRT2) / 2), (0.5, 1.0))),
    CurveRelation(('C7',), ('C5',), (((SQRT2 - 1) / 2, 0.5),)),
    CurveRelation(('C3',), ('C2',), ((1 / 3, 4 * SQRT2 - 5),)),
    CurveRelation(('C3',), ('C4',), ((0.0, 1 / 3), (4 * SQRT2 - 5, 1.0))),
    CurveRelation(('C8',), ('C4',), ((0.0, 1.0),), identity=True),
)
