import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

from exceptions import DomainError
from models.constants import S_MAX, S_MIN, T_MAX, T_MIN
from models.extremal_param import ExtremalParam, q_family
from models.poly import Poly
from repositories.extremal_repository import scan_extremes

logger = logging.getLogger(__name__)

SIGNS = (1, -1)


def modulus_norm_ratio(p: Poly) -> float:
    """
    Ratio ‖|P|‖ / ‖P‖ of the coefficient-wise modulus to the polynomial

    Args:
        p: Nonzero polynomial

    Raises:
        DomainError: for the zero polynomial
    """
    norm = p.sector_norm()
    if norm == 0.0:
        raise DomainError("The zero polynomial has no modulus ratio")
    return p.modulus().sector_norm() / norm


@dataclass(frozen=True)
class UnconditionalConstant:
    value: float
    witness: Poly
    argmax: ExtremalParam


def unconditional_constant(resolution: int = 2048, refine_iters: int = 60) -> UnconditionalConstant:
    """
    Maximize ‖|P|‖ over the extreme points of the unit ball

    Args:
        resolution: Grid size per family
        refine_iters: Golden-section iterations around the best cell

    Returns:
        UnconditionalConstant whose value is 5+4√2 and whose witness is
        (1, 5+4√2, −4−4√2)
    """
    result = scan_extremes(lambda p: p.modulus().sector_norm(), resolution, refine_iters)
    logger.info("Unconditional constant %r attained at %s", result.value, result.argmax)
    return UnconditionalConstant(result.value, q_family(S_MAX), result.argmax)


def p_profile(t: float) -> float:
    """‖|P_t|‖ = ½(|t| + 6 + 3t + 8√(1+t)) for t in [−1, 1]"""
    if not T_MIN <= t <= T_MAX:
        raise DomainError(f"P-family parameter t={t} outside [-1, 1]")
    return 0.5 * (abs(t) + 6 + 3 * t + 8 * math.sqrt(1 + t))


def q_profile(s: float) -> float:
    """‖|Q_s|‖ = ½(1 + s + 2√(2(1+s))) for s in [1, 5+4√2]"""
    if not S_MIN <= s <= S_MAX:
        raise DomainError(f"Q-family parameter s={s} outside [1, 5+4√2]")
    return 0.5 * (1 + s + 2 * math.sqrt(2 * (1 + s)))


def sign_patterns(p: Poly) -> List[Poly]:
    """
    The eight polynomials (±a, ±b, ±c)

    Returns:
        List in the order of (sa, sb, sc) over (+1, −1)³
    """
    return [p.with_signs(sa, sb, sc) for sa, sb, sc in itertools.product(SIGNS, repeat=3)]


def max_sign_pattern_ratio(p: Poly) -> Tuple[float, Poly]:
    """
    Largest ‖(±a, ±b, ±c)‖ / ‖P‖ over the sign changes of p

    Returns:
        Tuple of (ratio, the first pattern attaining it)
    """
    norm = p.sector_norm()
    if norm == 0.0:
        raise DomainError("The zero polynomial has no sign-pattern ratio")
    best_ratio, best_pattern = -1.0, p
    for pattern in sign_patterns(p):
        ratio = pattern.sector_norm() / norm
        if ratio > best_ratio:
            best_ratio, best_pattern = ratio, pattern
    return best_ratio, best_pattern
