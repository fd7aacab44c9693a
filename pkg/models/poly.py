import math
from dataclasses import dataclass
from typing import Optional, Tuple

from exceptions import DomainError
from models.sector_point import SectorPoint


def _eigen_sign(a: float, b: float, c: float) -> float:
    # sign of the √((a−b)²+c²) term; at c == 0 it follows a−b so that the
    # term stays inside the sector and both norm branches coincide
    if c != 0:
        return math.copysign(1.0, c)
    return -1.0 if a < b else 1.0


def _aligned_norm(a: float, b: float, c: float) -> float:
    radius = math.hypot(a - b, c)
    return max(
        abs(a),
        0.5 * abs(a + b + c),
        0.5 * abs(a + b + _eigen_sign(a, b, c) * radius),
    )


def _opposed_norm(a: float, b: float, c: float) -> float:
    return max(abs(a), 0.5 * abs(a + b + c))


@dataclass(frozen=True)
class Poly:
    """A real 2-homogeneous polynomial a·x² + b·y² + c·x·y"""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ('a', 'b', 'c'):
            object.__setattr__(self, name, float(getattr(self, name)))
        is_valid, error_message = self.validate()
        if not is_valid:
            raise DomainError(error_message)

    def validate(self) -> Tuple[bool, Optional[str]]:
        """
        Validate the coefficients

        Returns:
            Tuple of (is_valid, error_message)
        """
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c)):
            return False, f"Coefficients {self.coefficients} must be finite"
        return True, None

    @property
    def coefficients(self) -> Tuple[float, float, float]:
        return (self.a, self.b, self.c)

    @property
    def is_zero(self) -> bool:
        return self.a == 0.0 and self.b == 0.0 and self.c == 0.0

    def eval(self, x, y):
        """
        Evaluate the polynomial at (x, y)

        Works element-wise when x and y are numpy arrays.
        """
        return self.a * x * x + self.b * y * y + self.c * x * y

    def sector_norm(self) -> float:
        """
        Exact sup-norm over the π/4 sector

        Returns:
            max{|a|, ½|a+b+c|, ½|a+b+sign·√((a−b)²+c²)|} when c(a−b) >= 0,
            max{|a|, ½|a+b+c|} when c(a−b) <= 0
        """
        (a, b, c), scale = self._unit_coefficients()
        if c * (a - b) >= 0:
            return scale * _aligned_norm(a, b, c)
        return scale * _opposed_norm(a, b, c)

    def _unit_coefficients(self) -> Tuple[Tuple[float, float, float], float]:
        # divided by max|coefficient| so that a+b and c(a−b) cannot overflow
        scale = max(abs(self.a), abs(self.b), abs(self.c))
        if scale == 0.0:
            return (0.0, 0.0, 0.0), 0.0
        return (self.a / scale, self.b / scale, self.c / scale), scale

    def _norm_aligned_branch(self) -> float:
        coefficients, scale = self._unit_coefficients()
        return scale * _aligned_norm(*coefficients)

    def _norm_opposed_branch(self) -> float:
        coefficients, scale = self._unit_coefficients()
        return scale * _opposed_norm(*coefficients)

    def gradient(self, pt: SectorPoint) -> Tuple[float, float]:
        """Return ∇P(x, y) = (2a·x + c·y, 2b·y + c·x)"""
        x, y = pt
        return (2 * self.a * x + self.c * y, 2 * self.b * y + self.c * x)

    def modulus(self) -> 'Poly':
        """Return |P| = (|a|, |b|, |c|)"""
        return Poly(abs(self.a), abs(self.b), abs(self.c))

    def polar(self):
        """Return the symmetric bilinear form L with L(v, v) = P(v)"""
        from models.bilinear_form import SymBilinearForm
        return SymBilinearForm.polar_of(self)

    def normalized(self) -> 'Poly':
        """Return P / ‖P‖, the radial projection onto the unit sphere"""
        norm = self.sector_norm()
        if norm == 0:
            raise DomainError("The zero polynomial cannot be normalized")
        return self * (1.0 / norm)

    def with_signs(self, sa: int, sb: int, sc: int) -> 'Poly':
        return Poly(sa * self.a, sb * self.b, sc * self.c)

    def __neg__(self) -> 'Poly':
        return Poly(-self.a, -self.b, -self.c)

    def __mul__(self, k: float) -> 'Poly':
        return Poly(k * self.a, k * self.b, k * self.c)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Poly(a={self.a!r}, b={self.b!r}, c={self.c!r})"
