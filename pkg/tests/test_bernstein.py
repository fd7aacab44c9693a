import math

import numpy as np
import pytest

from exceptions import DomainError
from inequalities.bernstein import (
    C_CURVES, C_RELATIONS, branch_curve_c, c4, c8, continuity_gaps, critical_parameters,
    gradient_norm_squared, markov_constant, markov_oracle, markov_profile, markov_profile_max, phi,
    phi_branch, phi_oracle, phi_squared, phi_witness,
)
from models.constants import MARKOV_SQUARED, QUARTER_PI, S_MAX, SQRT2
from models.extremal_param import Family
from models.sector_point import SectorPoint
from oracle.corpus import arc_points


class TestPhiSquared:
    """Tests for the pointwise bound on ‖∇P‖₂²"""

    @pytest.mark.parametrize('x, y, expected', [
        (1, 0, 52 + 32 * SQRT2),
        (1, 0.3, 1 / 0.09 + 4 * 1.09),
        (1, 0.5, 15.125),
        (SQRT2 / 2, SQRT2 / 2, 52 + 32 * SQRT2),
    ])
    def test_examples(self, x, y, expected):
        """Test the piecewise value in every region"""
        assert phi_squared(SectorPoint(x, y)) == pytest.approx(expected, rel=1e-12)

    def test_phi_is_the_root(self):
        """Test phi = √phi_squared"""
        assert phi(SectorPoint(1, 0)) == pytest.approx(math.sqrt(52 + 32 * SQRT2), rel=1e-15)
        assert phi(SectorPoint.from_angle(QUARTER_PI)) == pytest.approx(math.sqrt(MARKOV_SQUARED), rel=1e-12)

    @pytest.mark.parametrize('lam, branch', [
        (0.0, 'C4'), ((SQRT2 - 1) / 2, 'C4'), (0.3, 'C5'), (SQRT2 - 1, 'C5'),
        (0.5, 'C2'), (4 * SQRT2 - 5, 'C4'), (1.0, 'C4'),
    ])
    def test_branch_selection(self, lam, branch):
        """Test region ownership, first-listed branch on shared boundaries"""
        assert phi_branch(SectorPoint(1, lam)) == branch

    def test_homogeneity(self):
        """Test phi_squared(k·pt) = k²·phi_squared(pt)"""
        for pt in arc_points(16):
            for k in (0.5, 2.0, 10.0):
                assert phi_squared(pt.scaled(k)) == pytest.approx(k * k * phi_squared(pt), rel=1e-12)

    def test_origin_rejected(self):
        """Test that the origin raises DomainError"""
        with pytest.raises(DomainError):
            phi_squared(SectorPoint(0, 0))

    def test_large_points(self):
        """Test that phi stays finite where only phi_squared leaves the float range"""
        assert phi(SectorPoint(1e200, 0)) == pytest.approx(1e200 * math.sqrt(MARKOV_SQUARED), rel=1e-12)
        assert phi(SectorPoint(1e300, 0.5e300)) == pytest.approx(1e300 * math.sqrt(15.125), rel=1e-12)
        assert phi_squared(SectorPoint(1e150, 0.5e150)) == pytest.approx(1e300 * 15.125, rel=1e-12)

    def test_continuity_at_boundaries(self):
        """Test that adjacent formulas agree where regions meet"""
        for lam, gap in continuity_gaps().items():
            assert gap <= 1e-9, lam

    def test_sharp_against_oracle(self, config):
        """Test phi_squared against the extreme-point scan on the arc"""
        for pt in arc_points(16):
            scan = phi_oracle(pt, config.EXTREME_RESOLUTION, config.REFINE_ITERS)
            assert scan.value == pytest.approx(phi_squared(pt), rel=1e-6)

    def test_bernstein_inequality_sampled(self, unit_polys):
        """Test ‖∇p(pt)‖₂ <= phi(pt) for unit-norm polynomials"""
        for pt in arc_points(32):
            bound = phi(pt) * (1 + 1e-9)
            for p in unit_polys:
                assert math.sqrt(gradient_norm_squared(p, pt)) <= bound


class TestWitnessAndCriticalParameters:
    """Tests for the attaining extreme points"""

    @pytest.mark.parametrize('lam', [0.0, 0.1, 0.25, 0.3, 0.4, 0.45, 0.5, 0.6, 0.8, 1.0])
    def test_witness_attains(self, lam):
        """Test that the witness reaches phi_squared"""
        pt = SectorPoint(1, lam)
        param = phi_witness(pt)
        assert gradient_norm_squared(param.to_poly(), pt) == pytest.approx(phi_squared(pt), rel=1e-9)

    def test_witness_families(self):
        """Test the family of each branch's witness"""
        assert phi_witness(SectorPoint(1, 0)).t == 1.0
        assert phi_witness(SectorPoint(1, 0.3)).family is Family.Q
        assert phi_witness(SectorPoint(1, 0.5)).t == pytest.approx(-0.75)

    def test_critical_parameters(self):
        """Test the critical parameters and their admissibility"""
        params = critical_parameters(0.5)
        assert params.t1 is None
        assert params.t2 == pytest.approx(-0.75)
        assert params.s1 == pytest.approx(1.0)
        assert params.s2 == pytest.approx(7.0)
        assert critical_parameters(0.0).t1 == -1.0

    def test_critical_parameters_range(self):
        """Test that λ outside [0, 1] raises DomainError"""
        with pytest.raises(DomainError):
            critical_parameters(1.5)


class TestBranchCurves:
    """Tests for the curves C1..C8"""

    @pytest.mark.parametrize('curve_id, lam, expected', [
        ('C1', 0.0, 4.0),
        ('C4', 0.0, 52 + 32 * SQRT2),
        ('C7', 1.0, 8.0),
        ('C3', 1.0, 40.0),
        ('c5', 0.5, 4 + 4 * 1.25),
    ])
    def test_values(self, curve_id, lam, expected):
        """Test curve values at (1, λ)"""
        assert branch_curve_c(curve_id, lam) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize('curve_id, lam', [('C2', 0.2), ('C1', 0.5), ('C5', 0.6), ('C9', 0.5)])
    def test_outside_domain(self, curve_id, lam):
        """Test that λ outside the domain or unknown ids raise DomainError"""
        with pytest.raises(DomainError):
            branch_curve_c(curve_id, lam)

    def test_c8_equals_c4(self):
        """Test that the two expansions of the witness gradient coincide"""
        for lam in np.linspace(0.0, 1.0, 200):
            assert c8(1.0, lam) == pytest.approx(c4(1.0, lam), rel=1e-12)

    def test_relations(self):
        """Test the dominance relations between the curves"""
        for relation in C_RELATIONS:
            gap, lam = relation.worst_gap(C_CURVES, 200)
            assert gap <= 1e-9, f"{relation.name} fails at λ={lam}"


class TestMarkovConstant:
    """Tests for the global constant"""

    def test_closed_form(self):
        """Test both scales and the witness"""
        constant = markov_constant()
        assert constant.squared == pytest.approx(97.25483399593904, rel=1e-15)
        assert constant.linear == pytest.approx(9.8617866, rel=1e-7)
        assert constant.witness.coefficients == pytest.approx((1, S_MAX, -4 - 4 * SQRT2))

    def test_witness_gradient(self):
        """Test ‖∇witness(1, 0)‖₂² = 4 + (4+4√2)²"""
        witness = markov_constant().witness
        assert gradient_norm_squared(witness, SectorPoint(1, 0)) == pytest.approx(MARKOV_SQUARED, rel=1e-12)

    def test_profile_peaks_at_both_ends(self):
        """Test phi_squared along the arc"""
        profile = markov_profile(np.linspace(0.0, QUARTER_PI, 33))
        assert profile[0] == pytest.approx(MARKOV_SQUARED, rel=1e-12)
        assert profile[-1] == pytest.approx(MARKOV_SQUARED, rel=1e-12)
        assert profile.max() <= MARKOV_SQUARED * (1 + 1e-12)

    def test_global_oracle(self, config):
        """Test the (θ × extreme points) oracle"""
        result = markov_oracle(9, config.EXTREME_RESOLUTION, config.REFINE_ITERS)
        assert result.squared == pytest.approx(MARKOV_SQUARED, rel=1e-6)
        assert result.theta == 0.0
        assert result.argmax.family is Family.P
        assert result.linear == pytest.approx(math.sqrt(MARKOV_SQUARED), rel=1e-6)
        assert result.profile_max == pytest.approx(MARKOV_SQUARED, rel=1e-12)

    def test_profile_maximum(self):
        """Test the closed-form maximum along the arc and where it is first attained"""
        value, theta = markov_profile_max(64)
        assert value == pytest.approx(MARKOV_SQUARED, rel=1e-12)
        assert theta == 0.0
        with pytest.raises(DomainError):
            markov_profile_max(1)
