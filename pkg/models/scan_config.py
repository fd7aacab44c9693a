from dataclasses import dataclass, replace
from typing import Optional, Tuple

from exceptions import DomainError


@dataclass(frozen=True)
class ScanConfig:
    """Resolution of the brute-force oracles"""

    grid: int = 4096
    refine_iters: int = 60
    seed: int = 42

    def __post_init__(self):
        is_valid, error_message = self.validate()
        if not is_valid:
            raise DomainError(error_message)

    def validate(self) -> Tuple[bool, Optional[str]]:
        """
        Validate the scan sizes

        Returns:
            Tuple of (is_valid, error_message)
        """
        if self.grid < 2:
            return False, f"Grid must have at least 2 samples, got {self.grid}"
        if self.refine_iters < 0:
            return False, f"Refinement iterations must be >= 0, got {self.refine_iters}"
        if self.seed < 0:
            return False, f"Seed must be unsigned, got {self.seed}"
        return True, None

    def doubled(self) -> 'ScanConfig':
        return replace(self, grid=2 * self.grid)
