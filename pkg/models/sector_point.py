import math
from dataclasses import dataclass
from typing import Optional, Tuple

from exceptions import DomainError
from models.constants import QUARTER_PI


@dataclass(frozen=True)
class SectorPoint:
    """A point (x, y) of the closed cone 0 <= y <= x over the π/4 sector"""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, 'x', float(self.x))
        object.__setattr__(self, 'y', float(self.y))
        is_valid, error_message = self.validate()
        if not is_valid:
            raise DomainError(error_message)

    def validate(self) -> Tuple[bool, Optional[str]]:
        """
        Validate the point coordinates

        Returns:
            Tuple of (is_valid, error_message)
        """
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            return False, f"Point ({self.x}, {self.y}) has non-finite coordinates"

        if self.y < 0 or self.y > self.x:
            return False, f"Point ({self.x}, {self.y}) lies outside the sector 0 <= y <= x"

        return True, None

    @classmethod
    def from_angle(cls, theta: float) -> 'SectorPoint':
        """
        Parametrize the arc of the sector

        Args:
            theta: Angle in [0, π/4]

        Returns:
            The point (cos θ, sin θ)
        """
        theta = float(theta)
        if not 0.0 <= theta <= QUARTER_PI:
            raise DomainError(f"Angle {theta} outside [0, π/4]")
        x, y = math.cos(theta), math.sin(theta)
        # rounding near π/4 may put sin one ulp above cos
        return cls(x, min(x, y))

    @property
    def is_origin(self) -> bool:
        return self.x == 0.0 and self.y == 0.0

    @property
    def ratio(self) -> float:
        """The ratio λ = y/x, defined whenever x > 0"""
        if self.x == 0.0:
            raise DomainError("The ratio y/x is undefined at the origin")
        return self.y / self.x

    @property
    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    def scaled(self, k: float) -> 'SectorPoint':
        """Return k·(x, y) for k >= 0"""
        return SectorPoint(k * self.x, k * self.y)

    def require_not_origin(self) -> 'SectorPoint':
        if self.is_origin:
            raise DomainError("The origin is not admitted here")
        return self

    def __iter__(self):
        yield self.x
        yield self.y


def from_angle(theta: float) -> SectorPoint:
    """Module-level alias of SectorPoint.from_angle"""
    return SectorPoint.from_angle(theta)
