import math

import numpy as np
import pytest

from exceptions import NonFiniteValueError
from models.constants import QUARTER_PI, S_MAX
from models.extremal_param import q_family
from models.poly import Poly
from models.scan_config import ScanConfig
from oracle.corpus import arc_points, random_polys
from oracle.search import golden_section_maximize, max_1d, max_2d, numeric_poly_norm


class TestMax1d:
    """Tests for the 1D grid-and-golden maximizer"""

    def test_monotone_objective(self, scan_config):
        """Test that sin on [0, π/4] peaks at the right end"""
        x, fx = max_1d(np.sin, 0.0, QUARTER_PI, scan_config)
        assert x == pytest.approx(QUARTER_PI, abs=1e-12)
        assert fx == pytest.approx(math.sqrt(2) / 2, rel=1e-15)

    def test_half_double_angle(self, scan_config):
        """Test |cos θ · sin θ| = ½ sin 2θ"""
        _, fx = max_1d(lambda t: np.abs(np.cos(t) * np.sin(t)), 0.0, QUARTER_PI, scan_config)
        assert fx == pytest.approx(0.5, rel=1e-15)

    def test_constant_objective(self, scan_config):
        """Test a constant objective"""
        x, fx = max_1d(lambda t: 3.0, 0.0, 1.0, scan_config)
        assert fx == 3.0
        assert 0.0 <= x <= 1.0

    def test_interior_maximum(self):
        """Test refinement of an interior maximum between grid points"""
        x, fx = max_1d(lambda t: -(t - 0.3141592) ** 2, 0.0, 1.0, ScanConfig(grid=11, refine_iters=60))
        assert x == pytest.approx(0.3141592, abs=1e-7)
        assert fx <= 0.0

    def test_degenerate_interval(self, scan_config):
        """Test lo == hi"""
        assert max_1d(lambda t: t * t, 2.0, 2.0, scan_config) == (2.0, 4.0)

    def test_non_finite_reports_location(self, scan_config):
        """Test that a NaN objective raises NonFiniteValueError at its location"""
        with pytest.raises(NonFiniteValueError) as info:
            max_1d(lambda t: math.nan if t > 0.5 else t, 0.0, 1.0, ScanConfig(grid=3, refine_iters=0))
        assert info.value.location == 1.0

    def test_golden_section(self):
        """Test golden-section search on a parabola"""
        x, fx = golden_section_maximize(lambda t: 1 - (t - 0.25) ** 2, 0.0, 1.0, 80)
        assert x == pytest.approx(0.25, abs=1e-7)
        assert fx == pytest.approx(1.0)


class TestMax2d:
    """Tests for the 2D grid-and-coordinate-golden maximizer"""

    def test_diagonal(self, scan_config):
        """Test cos(θ−φ), maximal on the diagonal"""
        (u, v), value = max_2d(lambda a, b: np.cos(a - b), ((0.0, QUARTER_PI), (0.0, QUARTER_PI)),
                               ScanConfig(grid=64, refine_iters=20))
        assert value == pytest.approx(1.0, rel=1e-15)
        assert u == pytest.approx(v, abs=1e-6)

    def test_corner(self):
        """Test −(θ²+φ²), maximal at the origin"""
        point, value = max_2d(lambda a, b: -(a * a + b * b), ((0.0, 1.0), (0.0, 1.0)),
                              ScanConfig(grid=32, refine_iters=20))
        assert point == (0.0, 0.0)
        assert value == 0.0

    def test_scalar_objective(self):
        """Test that non-vectorized objectives are evaluated element-wise"""
        def objective(a, b):
            return -math.hypot(a - 0.5, b - 0.25)

        (u, v), value = max_2d(objective, ((0.0, 1.0), (0.0, 1.0)), ScanConfig(grid=17, refine_iters=40))
        assert (u, v) == pytest.approx((0.5, 0.25), abs=1e-6)
        assert value == pytest.approx(0.0, abs=1e-6)

    def test_witness_bilinear(self, witness):
        """Test |L(e^iθ, e^iφ)| for the polar of the witness"""
        form = witness.polar()
        _, value = max_2d(
            lambda a, b: np.abs(form.apply(np.cos(a), np.sin(a), np.cos(b), np.sin(b))),
            ((0.0, QUARTER_PI), (0.0, QUARTER_PI)), ScanConfig(grid=65, refine_iters=20),
        )
        assert value == pytest.approx(2 + math.sqrt(2) / 2, rel=1e-12)


class TestNumericNorm:
    """Tests for the brute-force sup-norm"""

    @pytest.mark.parametrize('coefficients, expected', [
        ((1, 1, 0), 1.0),
        ((0, 0, 1), 0.5),
        ((1, S_MAX, -4 - 4 * math.sqrt(2)), 1.0),
    ])
    def test_examples(self, scan_config, coefficients, expected):
        """Test the oracle on known norms"""
        assert numeric_poly_norm(Poly(*coefficients), scan_config) == pytest.approx(expected, rel=1e-12)

    def test_agrees_with_closed_form(self, random_polys, scan_config):
        """Test oracle against the exact norm on the random corpus"""
        for p in random_polys:
            exact = p.sector_norm()
            assert abs(numeric_poly_norm(p, scan_config) - exact) <= 1e-6 * max(1.0, exact)

    def test_resolution_convergence(self, random_polys, scan_config):
        """Test that doubling the grid changes the oracle by at most 1e-8"""
        for p in random_polys[:20]:
            coarse = numeric_poly_norm(p, scan_config)
            fine = numeric_poly_norm(p, scan_config.doubled())
            assert abs(coarse - fine) <= 1e-8 * max(1.0, fine)

    def test_deterministic(self, random_polys, scan_config):
        """Test bit-identical results for identical configuration"""
        p = random_polys[0]
        assert numeric_poly_norm(p, scan_config) == numeric_poly_norm(p, scan_config)


class TestCorpus:
    """Tests for the seeded test corpus"""

    def test_seeded(self):
        """Test that the corpus depends only on the seed"""
        assert random_polys(5, seed=7) == random_polys(5, seed=7)
        assert random_polys(5, seed=7) != random_polys(5, seed=8)

    def test_bound(self):
        """Test the coefficient bound"""
        for p in random_polys(50, seed=1, bound=2.0):
            assert max(abs(v) for v in p.coefficients) <= 2.0

    def test_arc_points(self):
        """Test the arc grid ends"""
        points = arc_points(5)
        assert len(points) == 5
        assert tuple(points[0]) == (1.0, 0.0)
        assert points[-1].x == pytest.approx(points[-1].y)

    def test_witness_fixture(self, witness):
        """Test the shared witness polynomial"""
        assert witness == q_family(S_MAX)
