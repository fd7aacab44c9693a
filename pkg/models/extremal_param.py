import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from exceptions import DomainError
from models.constants import S_MAX, S_MIN, T_MAX, T_MIN
from models.poly import Poly


class Family(Enum):
    """The three kinds of extreme points of the unit ball"""
    P = 'P'
    Q = 'Q'
    CORNER = 'CORNER'


FAMILY_ORDER = (Family.P, Family.Q, Family.CORNER)


def p_family(t: float) -> Poly:
    """
    Extreme polynomial P_t = (t, 4+t+4√(1+t), −2−2t−4√(1+t))

    Args:
        t: Parameter in [−1, 1]
    """
    if not T_MIN <= t <= T_MAX:
        raise DomainError(f"P-family parameter t={t} outside [-1, 1]")
    u = math.sqrt(1.0 + t)
    return Poly(t, 4.0 + t + 4.0 * u, -2.0 - 2.0 * t - 4.0 * u)


def q_family(s: float) -> Poly:
    """
    Extreme polynomial Q_s = (1, s, −2√(2(1+s)))

    Args:
        s: Parameter in [1, 5+4√2]
    """
    if not S_MIN <= s <= S_MAX:
        raise DomainError(f"Q-family parameter s={s} outside [1, 5+4√2]")
    return Poly(1.0, s, -2.0 * math.sqrt(2.0 * (1.0 + s)))


def corner() -> Poly:
    """The isolated extreme point (1, 1, 0)"""
    return Poly(1.0, 1.0, 0.0)


def u_of_t(t: float) -> float:
    """Substitution u = √(1+t), u in [0, √2]"""
    return math.sqrt(1.0 + t)


def v_of_s(s: float) -> float:
    """Substitution v = √(2(1+s)), v in [2, 2+2√2]"""
    return math.sqrt(2.0 * (1.0 + s))


@dataclass(frozen=True)
class ExtremalParam:
    """Tagged parameter selecting one extreme point ±P_t, ±Q_s or ±(1,1,0)"""

    family: Family
    t: Optional[float] = None
    s: Optional[float] = None
    sign: int = 1

    def __post_init__(self):
        for name in ('t', 's'):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, float(value))
        object.__setattr__(self, 'sign', int(self.sign))
        is_valid, error_message = self.validate()
        if not is_valid:
            raise DomainError(error_message)

    def validate(self) -> Tuple[bool, Optional[str]]:
        """
        Validate family, parameter range and sign

        Returns:
            Tuple of (is_valid, error_message)
        """
        if self.sign not in (1, -1):
            return False, f"Sign must be +1 or -1, got {self.sign}"

        if self.family is Family.P:
            if self.t is None or self.s is not None:
                return False, "Family P takes exactly the parameter t"
            if not T_MIN <= self.t <= T_MAX:
                return False, f"t={self.t} outside [-1, 1]"
        elif self.family is Family.Q:
            if self.s is None or self.t is not None:
                return False, "Family Q takes exactly the parameter s"
            if not S_MIN <= self.s <= S_MAX:
                return False, f"s={self.s} outside [1, 5+4√2]"
        elif self.t is not None or self.s is not None:
            return False, "The corner takes no parameter"

        return True, None

    @property
    def parameter(self) -> Optional[float]:
        return self.t if self.family is Family.P else self.s

    def to_poly(self) -> Poly:
        """Return the signed extreme polynomial this parameter selects"""
        if self.family is Family.P:
            poly = p_family(self.t)
        elif self.family is Family.Q:
            poly = q_family(self.s)
        else:
            poly = corner()
        return poly if self.sign > 0 else -poly

    def __str__(self) -> str:
        sign = '+' if self.sign > 0 else '-'
        if self.family is Family.CORNER:
            return f"{sign}(1,1,0)"
        name = 't' if self.family is Family.P else 's'
        return f"{sign}{self.family.value}[{name}={self.parameter!r}]"
