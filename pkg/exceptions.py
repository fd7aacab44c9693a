from typing import Iterable, Optional, Tuple


class SectorError(Exception):
    """Base class for every error raised by the sector inequality library"""


class DomainError(SectorError, ValueError):
    """Raised when an input lies outside the domain of an operation"""


class NonFiniteValueError(SectorError, ArithmeticError):
    """Raised when an objective returns NaN or infinity during a scan"""

    def __init__(self, location, value: float, operation: Optional[str] = None):
        """
        Args:
            location: Point (scalar or tuple) where the objective was evaluated
            value: The offending value
            operation: Name of the scan that hit it
        """
        self.location = location
        self.value = value
        self.operation = operation
        where = f" in {operation}" if operation else ""
        super().__init__(f"Non-finite objective value {value!r} at {location!r}{where}")


class VerificationError(SectorError):
    """Raised when one or more closed-form results disagree with their oracle"""

    def __init__(self, failures: Iterable[Tuple[str, str]]):
        """
        Args:
            failures: (check name, detail) pairs for every failing check
        """
        self.failures = list(failures)
        names = ', '.join(name for name, _ in self.failures)
        super().__init__(f"{len(self.failures)} check(s) outside tolerance: {names}")
