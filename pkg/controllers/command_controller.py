import argparse
import logging

import pandas as pd

from exceptions import DomainError
from inequalities import bernstein, polarization, unconditional
from inequalities.figures import FIGURES, figure_frame
from models.constants import MARKOV_SQUARED, POLARIZATION_CONSTANT, UNCONDITIONAL_CONSTANT
from models.output_record import OutputFormat, OutputRecord, RecordKind
from models.poly import Poly
from models.sector_point import SectorPoint
from oracle.search import numeric_poly_norm
from repositories.extremal_repository import ExtremalRepository
from repositories.reference_constants import CONSTANT_NAMES, COMPUTED_DOMAIN, ReferenceConstantsRepository
from verification.suite import VerificationSuite

logger = logging.getLogger(__name__)

ARC_SAMPLES = 64

_WITNESS_LABEL = '(1, 5+4*sqrt(2), -4-4*sqrt(2))'


def _coefficients(poly: Poly) -> str:
    return f"({poly.a!r}, {poly.b!r}, {poly.c!r})"


def _quantities(rows) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=['quantity', 'value'])


class CommandController:
    """Controller class for the command-line subcommands"""

    def __init__(self, config, repository: ExtremalRepository, references: ReferenceConstantsRepository):
        """
        Initialize the controller with its repositories

        Args:
            config: Config class supplying defaults
            repository: ExtremalRepository used by every oracle cross-check
            references: Store of the comparison-table constants
        """
        self.config = config
        self.repository = repository
        self.references = references
        self.parser = argparse.ArgumentParser(
            prog='sector',
            description='Sharp inequalities for 2-homogeneous polynomials on the π/4 sector',
        )
        self._subparsers = self.parser.add_subparsers(dest='command', required=True)
        self._common = self._common_arguments()
        self._register_commands()

    def _common_arguments(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--format', choices=[f.value for f in OutputFormat], default='human',
                            help='Output format')
        common.add_argument('--out', metavar='PATH', help='Also write the output to PATH')
        common.add_argument('--grid', type=int, help='Oracle grid size')
        common.add_argument('--refine-iters', type=int, help='Golden-section refinement iterations')
        common.add_argument('--tolerance', type=float, help='Tolerance of oracle cross-checks')
        common.add_argument('--metrics', action='store_true',
                            help='Print Prometheus metrics to stderr when done')
        common.add_argument('-v', '--verbose', action='count', default=0,
                            help='Log at INFO (-v) or DEBUG (-vv)')
        return common

    def _add_command(self, name: str, handler, help_text: str) -> argparse.ArgumentParser:
        parser = self._subparsers.add_parser(name, parents=[self._common], help=help_text)
        parser.set_defaults(handler=handler)
        return parser

    def _register_commands(self):
        """Register every subcommand with its handler"""
        parser = self._add_command('norm', self.norm, 'Sup-norm of a·x² + b·y² + c·xy')
        for name in ('a', 'b', 'c'):
            parser.add_argument(name, type=float)
        parser.add_argument('--verify', action='store_true', help='Compare with the brute-force norm')

        for name, handler, help_text in (('phi', self.phi, 'Bernstein bound on the gradient'),
                                         ('psi', self.psi, 'Bound on the differential')):
            parser = self._add_command(name, handler, help_text)
            parser.add_argument('x', type=float)
            parser.add_argument('y', type=float)
            parser.add_argument('--verify', action='store_true', help='Compare with the extreme-point scan')
            parser.add_argument('--witness', action='store_true', help='Show the attaining extreme point')

        self._add_command('constants', self.constants, 'Markov, polarization and unconditional constants')

        parser = self._add_command('figure', self.figure, 'Branch-curve data of one figure')
        parser.add_argument('n', type=int, help=f"Figure number 1..{len(FIGURES)}")
        parser.add_argument('--samples', type=int, help='λ samples')

        parser = self._add_command('table', self.table, 'Comparison table of sharp constants')
        parser.add_argument('which', choices=self.references.tables())

        parser = self._add_command('verify', self.verify, 'Run the oracle-versus-closed-form suite')
        parser.add_argument('--seed', type=int, help='Seed of the random corpus')
        parser.add_argument('--samples', type=int, help='Size of the random corpus')
        parser.add_argument('--only', action='append', help='Run only the named check (repeatable)')

    def _tolerance(self, args) -> float:
        return self.config.TOLERANCE if args.tolerance is None else args.tolerance

    def _scan_sizes(self, args):
        cfg = self.config.scan_config(grid=args.grid, refine_iters=args.refine_iters)
        return cfg, self.repository.resolution, cfg.refine_iters

    def norm(self, args) -> OutputRecord:
        """Handle `norm a b c`"""
        poly = Poly(args.a, args.b, args.c)
        value = poly.sector_norm()
        rows = [('sector_norm', value)]
        passed = True
        if args.verify:
            cfg, _, _ = self._scan_sizes(args)
            oracle = numeric_poly_norm(poly, cfg)
            gap = abs(value - oracle)
            passed = gap <= self._tolerance(args) * max(1.0, value)
            rows += [('oracle', oracle), ('gap', gap)]
        return OutputRecord(RecordKind.SCALAR, f"norm of {_coefficients(poly)}", _quantities(rows),
                            passed=passed)

    def _bound(self, args, name: str, pt: SectorPoint, rows, oracle, witness, meta) -> OutputRecord:
        passed = True
        if args.verify:
            _, resolution, refine_iters = self._scan_sizes(args)
            scan = oracle(pt, resolution, refine_iters)
            closed = rows[0][1]
            gap = abs(closed - scan.value) / closed
            passed = gap <= self._tolerance(args)
            rows += [('oracle', scan.value), ('relative_gap', gap)]
            meta['oracle_argmax'] = str(scan.argmax)
        if args.witness:
            param = witness(pt)
            meta['witness'] = str(param)
            meta['witness_poly'] = _coefficients(param.to_poly())
        return OutputRecord(RecordKind.SCALAR, f"{name} at ({pt.x!r}, {pt.y!r})", _quantities(rows),
                            meta, passed)

    def phi(self, args) -> OutputRecord:
        """Handle `phi x y`; the oracle compares squared norms"""
        pt = SectorPoint(args.x, args.y).require_not_origin()
        squared = bernstein.phi_squared(pt)
        rows = [('phi_squared', squared), ('phi', bernstein.phi(pt))]
        meta = {'branch': bernstein.phi_branch(pt)}
        return self._bound(args, 'phi', pt, rows, bernstein.phi_oracle, bernstein.phi_witness, meta)

    def psi(self, args) -> OutputRecord:
        """Handle `psi x y`"""
        pt = SectorPoint(args.x, args.y).require_not_origin()
        rows = [('psi', polarization.psi(pt)),
                ('psi_p_family', polarization.psi_p_family(pt)),
                ('psi_q_family', polarization.psi_q_family(pt))]
        meta = {'branch': polarization.psi_branch(pt)}
        return self._bound(args, 'psi', pt, rows, polarization.psi_oracle, polarization.psi_witness, meta)

    def constants(self, args) -> OutputRecord:
        """Handle `constants`: closed form, oracle and gap of each sharp constant"""
        _, resolution, refine_iters = self._scan_sizes(args)
        markov = bernstein.markov_constant()
        markov_scan = bernstein.markov_oracle(ARC_SAMPLES, resolution, refine_iters)
        polar = polarization.polarization_constant(self.config.BILINEAR_GRID,
                                                   self.config.BILINEAR_REFINE_ITERS)
        uncond = unconditional.unconditional_constant(resolution, refine_iters)

        rows = [
            ('markov_squared', markov.squared, markov_scan.squared, _coefficients(markov.witness)),
            ('markov_linear', markov.linear, markov_scan.linear, _coefficients(markov.witness)),
            ('polarization', polar.value, polar.oracle, _coefficients(polar.witness)),
            ('unconditional', UNCONDITIONAL_CONSTANT, uncond.value, _coefficients(uncond.witness)),
        ]
        frame = pd.DataFrame(rows, columns=['constant', 'closed_form', 'oracle', 'witness'])
        frame.insert(3, 'gap', (frame['closed_form'] - frame['oracle']).abs() / frame['closed_form'])
        passed = bool((frame['gap'] <= self._tolerance(args)).all())
        return OutputRecord(RecordKind.TABLE, 'sharp constants of the π/4 sector', frame, passed=passed)

    def figure(self, args) -> OutputRecord:
        """Handle `figure n`"""
        samples = self.config.FIGURE_SAMPLES if args.samples is None else args.samples
        frame = figure_frame(args.n, samples)
        return OutputRecord(RecordKind.CURVE, f"figure {args.n}: {', '.join(FIGURES[args.n])}", frame)

    def _computed_column(self, args):
        _, resolution, refine_iters = self._scan_sizes(args)
        return {
            'markov': (bernstein.markov_profile_max(ARC_SAMPLES)[0], '4*(13+8*sqrt(2))'),
            'polarization': (polarization.polarization_constant().value, '2+sqrt(2)/2'),
            'unconditional': (unconditional.unconditional_constant(resolution, refine_iters).value,
                              '5+4*sqrt(2)'),
        }

    def table(self, args) -> OutputRecord:
        """Handle `table sectors|lp`; the π/4 sector column is computed, the rest are references"""
        order = self.references.domains(args.which)
        computed = self._computed_column(args) if COMPUTED_DOMAIN in order else {}
        rows = [
            (record.constant, record.domain, record.value, record.expression, 'reference',
             '' if record.witness is None else str(record.witness))
            for record in self.references.get_table(args.which)
        ]
        rows += [
            (constant, COMPUTED_DOMAIN, value, expression, 'computed', _WITNESS_LABEL)
            for constant, (value, expression) in computed.items()
        ]
        rows.sort(key=lambda row: (CONSTANT_NAMES.index(row[0]), order.index(row[1])))
        frame = pd.DataFrame(rows, columns=['constant', 'domain', 'value', 'expression', 'source', 'witness'])

        meta = {}
        if computed:
            meta['markov_reference'] = MARKOV_SQUARED
            meta['polarization_reference'] = POLARIZATION_CONSTANT
        return OutputRecord(RecordKind.TABLE, f"{args.which} comparison table", frame, meta)

    def verify(self, args) -> OutputRecord:
        """Handle `verify`: one row per check, exit status from the report"""
        suite = VerificationSuite(self.config, seed=args.seed, samples=args.samples,
                                  tolerance=args.tolerance, grid=args.grid, refine_iters=args.refine_iters)
        if args.only:
            unknown = set(args.only) - {name for name, _ in suite.checks()}
            if unknown:
                raise DomainError(f"Unknown check(s): {', '.join(sorted(unknown))}")
        report = suite.run(args.only)
        frame = pd.DataFrame(
            [(r.name, 'pass' if r.passed else 'FAIL', r.gap, r.tolerance, r.detail) for r in report.results],
            columns=['check', 'status', 'gap', 'tolerance', 'detail'],
        )
        meta = {'seed': suite.cfg.seed, 'samples': suite.samples, 'failures': len(report.failures)}
        failures = [(r.name, r.detail) for r in report.failures]
        return OutputRecord(RecordKind.VERIFICATION, 'verification report', frame, meta,
                            report.passed, failures)
