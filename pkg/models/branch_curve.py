import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Tuple

from exceptions import DomainError


@dataclass(frozen=True)
class BranchCurve:
    """
    A named scalar function of λ = y/x used to compare candidate suprema

    The domain is an interval [lo, hi] whose ends may be open. Values are
    those of the candidate at (x, y) = (1, λ).
    """

    id: str
    lo: float
    hi: float
    formula: Callable[[float], float]
    lo_open: bool = False
    hi_open: bool = False
    description: str = ''

    def contains(self, lam: float) -> bool:
        """Whether λ lies in the documented domain of the curve"""
        above = lam > self.lo if self.lo_open else lam >= self.lo
        below = lam < self.hi if self.hi_open else lam <= self.hi
        return above and below

    def value_at(self, lam: float) -> float:
        """
        Evaluate the curve

        Args:
            lam: λ in the curve's domain

        Returns:
            The curve value at (1, λ)
        """
        lam = float(lam)
        if not self.contains(lam):
            raise DomainError(f"λ={lam} outside the domain {self.domain_label} of {self.id}")
        return float(self.formula(lam))

    def value_or_none(self, lam: float) -> Optional[float]:
        """Curve value, or None when λ is outside the domain"""
        return self.formula(float(lam)) if self.contains(lam) else None

    @property
    def domain(self) -> Tuple[float, float]:
        return (self.lo, self.hi)

    @property
    def domain_label(self) -> str:
        left = '(' if self.lo_open else '['
        right = ')' if self.hi_open else ']'
        return f"{left}{self.lo!r}, {self.hi!r}{right}"


@dataclass(frozen=True)
class CurveRelation:
    """
    An inequality lhs <= rhs (or identity lhs == rhs) between branch curves

    Each side is the pointwise maximum of the listed curves that contain λ;
    λ values where a side has no curve are skipped.
    """

    lhs: Tuple[str, ...]
    rhs: Tuple[str, ...]
    intervals: Tuple[Tuple[float, float], ...]
    identity: bool = False

    @property
    def name(self) -> str:
        def side(ids):
            return ids[0] if len(ids) == 1 else f"max({','.join(ids)})"
        op = '=' if self.identity else '<='
        return f"{side(self.lhs)} {op} {side(self.rhs)}"

    @staticmethod
    def _side_value(ids, curves: Mapping[str, BranchCurve], lam: float) -> Optional[float]:
        values = [v for v in (curves[i].value_or_none(lam) for i in ids) if v is not None]
        return max(values) if values else None

    def worst_gap(self, curves: Mapping[str, BranchCurve], samples: int = 200) -> Tuple[float, Optional[float]]:
        """
        Largest relative violation over the sampled intervals

        Args:
            curves: Registry of curves by id
            samples: Grid points per interval

        Returns:
            Tuple of (gap, λ at the gap); gap <= 0 means the relation holds
            strictly, for identities it is the largest relative difference
        """
        worst, where = -math.inf, None
        for lo, hi in self.intervals:
            step = (hi - lo) / (samples - 1) if samples > 1 else 0.0
            for i in range(samples):
                lam = min(hi, lo + i * step)
                left = self._side_value(self.lhs, curves, lam)
                right = self._side_value(self.rhs, curves, lam)
                if left is None or right is None:
                    continue
                diff = abs(left - right) if self.identity else left - right
                gap = diff / max(1.0, abs(right))
                if gap > worst:
                    worst, where = gap, lam
        return worst, where
