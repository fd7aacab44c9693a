from dataclasses import dataclass


@dataclass(frozen=True)
class SymBilinearForm:
    """Symmetric bilinear form on the plane with matrix [[m11, m12], [m12, m22]]"""

    m11: float
    m22: float
    m12: float

    @classmethod
    def polar_of(cls, p) -> 'SymBilinearForm':
        """
        Build the polar of a polynomial

        Args:
            p: Poly instance

        Returns:
            The unique symmetric form with L(v, v) = p(v): m11=a, m22=b, m12=c/2
        """
        return cls(m11=p.a, m22=p.b, m12=p.c / 2.0)

    def apply(self, ux, uy, vx, vy):
        """
        Evaluate L(u, v); works element-wise on numpy arrays

        Args:
            ux, uy: Coordinates of u
            vx, vy: Coordinates of v
        """
        return self.m11 * ux * vx + self.m22 * uy * vy + self.m12 * (ux * vy + uy * vx)

    def diagonal(self, x, y):
        """Evaluate L((x, y), (x, y))"""
        return self.apply(x, y, x, y)

    @property
    def is_zero(self) -> bool:
        return self.m11 == 0.0 and self.m22 == 0.0 and self.m12 == 0.0
