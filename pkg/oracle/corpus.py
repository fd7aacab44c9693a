from typing import List

import numpy as np

from models.constants import QUARTER_PI
from models.poly import Poly
from models.sector_point import SectorPoint


def random_polys(n: int, seed: int = 42, bound: float = 10.0) -> List[Poly]:
    """
    Seeded corpus of nonzero polynomials with coefficients uniform in [−bound, bound]

    Args:
        n: Number of polynomials
        seed: Seed of numpy's default generator
        bound: Coefficient bound
    """
    rng = np.random.default_rng(seed)
    polys = []
    while len(polys) < n:
        a, b, c = rng.uniform(-bound, bound, size=3)
        poly = Poly(a, b, c)
        if not poly.is_zero:
            polys.append(poly)
    return polys


def unit_polys(n: int, seed: int = 42, bound: float = 10.0) -> List[Poly]:
    """The random corpus projected onto the unit sphere"""
    return [p.normalized() for p in random_polys(n, seed, bound)]


def arc_points(n: int) -> List[SectorPoint]:
    """n points (cos θ, sin θ) for θ uniform on [0, π/4], endpoints included"""
    return [SectorPoint.from_angle(float(theta)) for theta in np.linspace(0.0, QUARTER_PI, n)]
