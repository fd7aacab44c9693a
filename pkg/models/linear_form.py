"""Sup-norm of a linear form a·x + b·y over the arc of the π/4 sector"""
import math

from exceptions import DomainError
from models.constants import SQRT2


def sup_linear(a: float, b: float) -> float:
    """
    Compute sup over θ in [0, π/4] of |a cos θ + b sin θ|

    The two endpoint values |a| and (√2/2)|a+b| are always candidates; the
    interior critical point tan θ = b/a contributes √(a²+b²) only when
    0 < b/a <= 1. The single expression is continuous in (a, b) and agrees
    with the case split on every open case.

    Args:
        a: Coefficient of cos θ
        b: Coefficient of sin θ

    Returns:
        The supremum
    """
    interior = math.hypot(a, b) if a * b > 0 and abs(b) <= abs(a) else 0.0
    return max(abs(a), SQRT2 / 2 * abs(a + b), interior)


def sup_linear_cases(a: float, b: float) -> float:
    """
    The literal case split on the ratio b/a, defined for a != 0

    Returns √(a²+b²) when 0 < b/a < 1 and max{|a|, (√2/2)|a+b|} when
    b/a > 1 or b/a < 0. The boundary ratios b/a in {0, 1} fall under
    neither strict case; they are evaluated with the first formula, which
    is where both sides meet.
    """
    if a == 0:
        raise DomainError("The case split on b/a needs a != 0")
    ratio = b / a
    if 0 < ratio < 1:
        return math.hypot(a, b)
    if ratio > 1 or ratio < 0:
        return max(abs(a), SQRT2 / 2 * abs(a + b))
    return math.hypot(a, b)
