"""
Oracle-versus-closed-form acceptance suite

Every check compares a closed form of the library against a brute-force
scan or against the defining inequality on a seeded random corpus. Each
check has its own default tolerance; a suite-wide tolerance replaces all
of them.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from config import Config
from inequalities import bernstein, polarization, unconditional
from models.constants import (
    MARKOV_SQUARED, POLARIZATION_CONSTANT, PSI_MAXIMUM, QUARTER_PI, S_MAX, S_MIN, T_MAX, T_MIN,
    UNCONDITIONAL_CONSTANT,
)
from models.extremal_param import p_family, q_family
from models.scan_config import ScanConfig
from monitoring.metrics import record_check, track_scan_operation, update_verification_failures
from oracle.corpus import arc_points, random_polys
from oracle.search import numeric_poly_norm

logger = logging.getLogger(__name__)

ARC_POINTS = 64
PROFILE_POINTS = 200
EXTREME_POINTS = 1000
RELATION_POINTS = 200


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check"""
    name: str
    passed: bool
    gap: float
    tolerance: float
    detail: str = ''


@dataclass
class VerificationReport:
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]


def _relative(gap: float, reference: float) -> float:
    return abs(gap) / max(1.0, abs(reference))


class VerificationSuite:
    """Runs every cross-check with one configuration"""

    def __init__(self, config=Config, seed: Optional[int] = None, samples: Optional[int] = None,
                 tolerance: Optional[float] = None, grid: Optional[int] = None,
                 refine_iters: Optional[int] = None):
        """
        Initialize the suite

        Args:
            config: Config class supplying the defaults
            seed: Seed of the random corpus
            samples: Size of the random corpus
            tolerance: When given, replaces every per-check tolerance
            grid: Oracle 1D grid size
            refine_iters: Golden-section iterations
        """
        self.cfg: ScanConfig = config.scan_config(grid=grid, refine_iters=refine_iters, seed=seed)
        self.samples = config.SAMPLES if samples is None else samples
        self.tolerance = tolerance
        self.coeff_bound = config.COEFF_BOUND
        self.resolution = config.EXTREME_RESOLUTION
        self.bilinear_grid = config.BILINEAR_GRID
        self.bilinear_refine_iters = config.BILINEAR_REFINE_ITERS
        self._corpus = None

    @property
    def corpus(self):
        if self._corpus is None:
            self._corpus = random_polys(self.samples, self.cfg.seed, self.coeff_bound)
        return self._corpus

    def checks(self) -> List[Tuple[str, Callable[[float], CheckResult]]]:
        """(name, check) pairs in run order"""
        return [
            ('norm_oracle', self.check_norm_oracle),
            ('extreme_unit_norm', self.check_extreme_unit_norm),
            ('phi_sharpness', self.check_phi_sharpness),
            ('phi_continuity', self.check_phi_continuity),
            ('markov_oracle', self.check_markov_oracle),
            ('bernstein_sampled', self.check_bernstein_sampled),
            ('psi_sharpness', self.check_psi_sharpness),
            ('psi_continuity', self.check_psi_continuity),
            ('psi_family_split', self.check_psi_family_split),
            ('psi_max', self.check_psi_max),
            ('polarization_witness', self.check_polarization_witness),
            ('polarization_sampled', self.check_polarization_sampled),
            ('unconditional_constant', self.check_unconditional_constant),
            ('unconditional_sampled', self.check_unconditional_sampled),
            ('family_profiles', self.check_family_profiles),
            ('curve_relations', self.check_curve_relations),
        ]

    _DEFAULT_TOLERANCES = {
        'norm_oracle': 1e-6,
        'extreme_unit_norm': 1e-12,
        'phi_sharpness': 1e-6,
        'phi_continuity': 1e-9,
        'markov_oracle': 1e-6,
        'bernstein_sampled': 1e-9,
        'psi_sharpness': 1e-6,
        'psi_continuity': 1e-9,
        'psi_family_split': 1e-12,
        'psi_max': 1e-9,
        'polarization_witness': 1e-6,
        'polarization_sampled': 1e-6,
        'unconditional_constant': 1e-9,
        'unconditional_sampled': 1e-9,
        'family_profiles': 1e-12,
        'curve_relations': 1e-9,
    }

    def tolerance_for(self, name: str) -> float:
        return self.tolerance if self.tolerance is not None else self._DEFAULT_TOLERANCES[name]

    @track_scan_operation('verify')
    def run(self, only: Optional[List[str]] = None) -> VerificationReport:
        """
        Run the checks

        Args:
            only: Optional subset of check names

        Returns:
            VerificationReport
        """
        report = VerificationReport()
        for name, check in self.checks():
            if only is not None and name not in only:
                continue
            result = check(self.tolerance_for(name))
            record_check(name, result.passed)
            if result.passed:
                logger.info("check %s passed (gap %r <= %r)", name, result.gap, result.tolerance)
            else:
                logger.warning("check %s FAILED (gap %r > %r): %s", name, result.gap, result.tolerance,
                               result.detail)
            report.results.append(result)
        update_verification_failures(len(report.failures))
        return report

    @staticmethod
    def _result(name: str, gap: float, tolerance: float, detail: str) -> CheckResult:
        return CheckResult(name, bool(gap <= tolerance), float(gap), tolerance, detail)

    def check_norm_oracle(self, tolerance: float) -> CheckResult:
        worst, where = 0.0, None
        for p in self.corpus:
            exact = p.sector_norm()
            gap = _relative(exact - numeric_poly_norm(p, self.cfg), exact)
            if gap > worst:
                worst, where = gap, p
        return self._result('norm_oracle', worst, tolerance, f"worst at {where!r}")

    def check_extreme_unit_norm(self, tolerance: float) -> CheckResult:
        worst, where = 0.0, None
        for family, lo, hi, build in (('P', T_MIN, T_MAX, p_family), ('Q', S_MIN, S_MAX, q_family)):
            for x in np.linspace(lo, hi, EXTREME_POINTS):
                gap = abs(build(float(x)).sector_norm() - 1.0)
                if gap > worst:
                    worst, where = gap, f"{family} at {float(x)!r}"
        return self._result('extreme_unit_norm', worst, tolerance, f"worst at {where}")

    def _sharpness(self, name: str, closed_form, oracle, tolerance: float) -> CheckResult:
        worst, where = 0.0, None
        for pt in arc_points(ARC_POINTS):
            exact = closed_form(pt)
            scan = oracle(pt, self.resolution, self.cfg.refine_iters)
            gap = abs(exact - scan.value) / exact
            if gap > worst:
                worst, where = gap, f"({pt.x!r}, {pt.y!r}): closed {exact!r}, oracle {scan.value!r} at {scan.argmax}"
        return self._result(name, worst, tolerance, f"worst at {where}")

    def check_phi_sharpness(self, tolerance: float) -> CheckResult:
        return self._sharpness('phi_sharpness', bernstein.phi_squared, bernstein.phi_oracle, tolerance)

    def check_psi_sharpness(self, tolerance: float) -> CheckResult:
        return self._sharpness('psi_sharpness', polarization.psi, polarization.psi_oracle, tolerance)

    def check_phi_continuity(self, tolerance: float) -> CheckResult:
        gaps = bernstein.continuity_gaps()
        lam, gap = max(gaps.items(), key=lambda item: item[1])
        return self._result('phi_continuity', gap, tolerance, f"largest jump at λ={lam!r}")

    def check_psi_continuity(self, tolerance: float) -> CheckResult:
        gaps = polarization.continuity_gaps()
        lam, gap = max(gaps.items(), key=lambda item: item[1])
        return self._result('psi_continuity', gap, tolerance, f"largest jump at λ={lam!r}")

    def check_markov_oracle(self, tolerance: float) -> CheckResult:
        result = bernstein.markov_oracle(ARC_POINTS, self.resolution, self.cfg.refine_iters)
        worst = max(abs(result.squared - MARKOV_SQUARED), abs(result.profile_max - MARKOV_SQUARED))
        gap = worst / MARKOV_SQUARED
        return self._result('markov_oracle', gap, tolerance,
                            f"oracle {result.squared!r} at θ={result.theta!r} by {result.argmax}, "
                            f"profile max {result.profile_max!r}")

    def check_bernstein_sampled(self, tolerance: float) -> CheckResult:
        points = arc_points(ARC_POINTS)
        xs = np.array([pt.x for pt in points])
        ys = np.array([pt.y for pt in points])
        bounds = np.array([bernstein.phi(pt) for pt in points])
        worst, where = -math.inf, None
        for p in self.corpus:
            unit = p.normalized()
            gx = 2 * unit.a * xs + unit.c * ys
            gy = 2 * unit.b * ys + unit.c * xs
            excess = np.hypot(gx, gy) / bounds - 1.0
            index = int(np.argmax(excess))
            if excess[index] > worst:
                x, y = float(xs[index]), float(ys[index])
                worst, where = float(excess[index]), f"{unit!r} at ({x!r}, {y!r})"
        return self._result('bernstein_sampled', worst, tolerance, f"largest excess for {where}")

    def check_psi_family_split(self, tolerance: float) -> CheckResult:
        worst, where = 0.0, None
        for pt in arc_points(ARC_POINTS):
            exact = polarization.psi(pt)
            split = max(polarization.psi_p_family(pt), polarization.psi_q_family(pt))
            gap = abs(exact - split) / exact
            if gap > worst:
                worst, where = gap, (pt.x, pt.y)
        return self._result('psi_family_split', worst, tolerance, f"worst at {where!r}")

    def check_psi_max(self, tolerance: float) -> CheckResult:
        result = polarization.psi_max()
        gap = abs(result.value - PSI_MAXIMUM) + abs(result.theta - QUARTER_PI)
        return self._result('psi_max', gap, tolerance,
                            f"max {result.value!r} at θ={result.theta!r}, maximizers {result.maximizers!r}")

    def check_polarization_witness(self, tolerance: float) -> CheckResult:
        constant = polarization.polarization_constant(self.bilinear_grid, self.bilinear_refine_iters)
        gap = max(abs(constant.value - POLARIZATION_CONSTANT), abs(constant.oracle - POLARIZATION_CONSTANT))
        return self._result('polarization_witness', gap, tolerance,
                            f"closed form {constant.value!r}, bilinear oracle {constant.oracle!r}")

    def check_polarization_sampled(self, tolerance: float) -> CheckResult:
        worst, where = -math.inf, None
        for p in self.corpus:
            norm = p.sector_norm()
            sup = polarization.bilinear_sup_norm(p.polar(), self.bilinear_grid, self.bilinear_refine_iters)
            excess = sup / (POLARIZATION_CONSTANT * norm) - 1.0
            if excess > worst:
                worst, where = excess, p
        return self._result('polarization_sampled', worst, tolerance, f"largest excess for {where!r}")

    def check_unconditional_constant(self, tolerance: float) -> CheckResult:
        result = unconditional.unconditional_constant(self.resolution, self.cfg.refine_iters)
        gap = abs(result.value - UNCONDITIONAL_CONSTANT)
        return self._result('unconditional_constant', gap, tolerance,
                            f"scan {result.value!r} at {result.argmax}")

    def check_unconditional_sampled(self, tolerance: float) -> CheckResult:
        worst, where = -math.inf, None
        for p in self.corpus:
            modulus_norm = p.modulus().sector_norm()
            ratio = modulus_norm / p.sector_norm()
            pattern_ratio, pattern = unconditional.max_sign_pattern_ratio(p)
            excess = max(ratio / UNCONDITIONAL_CONSTANT - 1.0,
                         pattern_ratio / UNCONDITIONAL_CONSTANT - 1.0,
                         pattern.sector_norm() / modulus_norm - 1.0)
            if excess > worst:
                worst, where = excess, p
        return self._result('unconditional_sampled', worst, tolerance, f"largest excess for {where!r}")

    def check_family_profiles(self, tolerance: float) -> CheckResult:
        worst, where = 0.0, None
        profiles = (
            ('P', T_MIN, T_MAX, p_family, unconditional.p_profile),
            ('Q', S_MIN, S_MAX, q_family, unconditional.q_profile),
        )
        for family, lo, hi, build, profile in profiles:
            grid = np.linspace(lo, hi, PROFILE_POINTS)
            values = [profile(float(x)) for x in grid]
            if any(later < earlier for earlier, later in zip(values, values[1:])):
                return self._result('family_profiles', math.inf, tolerance, f"{family} profile not monotone")
            for x, value in zip(grid, values):
                gap = _relative(build(float(x)).modulus().sector_norm() - value, value)
                if gap > worst:
                    worst, where = gap, f"{family} at {float(x)!r}"
        return self._result('family_profiles', worst, tolerance, f"worst at {where}")

    def check_curve_relations(self, tolerance: float) -> CheckResult:
        worst, where = -math.inf, None
        for curves, relations in ((bernstein.C_CURVES, bernstein.C_RELATIONS),
                                  (polarization.D_CURVES, polarization.D_RELATIONS)):
            for relation in relations:
                gap, lam = relation.worst_gap(curves, RELATION_POINTS)
                if gap > worst:
                    worst, where = gap, f"{relation.name} at λ={lam!r}"
        return self._result('curve_relations', worst, tolerance, f"tightest {where}")
