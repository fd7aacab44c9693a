import json
import math

import pytest

from app import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, configure_logging
from config import Config
from verification.suite import VerificationSuite

SQRT2 = math.sqrt(2)


def rows_by_quantity(stdout):
    return {row['quantity']: row['value'] for row in json.loads(stdout)['rows']}


class TestNormCommand:
    """Tests for `norm a b c`"""

    def test_norm_csv(self, run_cli):
        """Test CSV output of a hand-computed norm"""
        result = run_cli('norm', 2, 1, -1, '--format', 'csv')
        assert result.exit_code == EXIT_OK
        assert result.stdout == 'quantity,value\nsector_norm,2.0\n'

    def test_norm_verify(self, run_cli):
        """Test the oracle cross-check rows"""
        result = run_cli('norm', 1, 0, 1, '--verify', '--format', 'json')
        assert result.exit_code == EXIT_OK
        rows = rows_by_quantity(result.stdout)
        assert rows['sector_norm'] == pytest.approx((1 + SQRT2) / 2)
        assert rows['gap'] <= 1e-6

    def test_coarse_oracle_fails(self, run_cli):
        """Test that a two-point grid misses an interior maximum and exits 3"""
        result = run_cli('norm', 1, 0, 1, '--verify', '--grid', 2, '--refine-iters', 0, '--format', 'json')
        assert result.exit_code == EXIT_VERIFICATION
        assert json.loads(result.stdout)['passed'] is False
        assert 'outside tolerance' in result.stderr

    @pytest.mark.parametrize('argv', [
        ('norm', 1, 2),
        ('norm', 'one', 2, 3),
        ('norm', 'nan', 0, 0),
        ('norm', 1, 2, 3, '--format', 'xml'),
    ])
    def test_bad_input(self, run_cli, argv):
        """Test that malformed arguments exit 2"""
        assert run_cli(*argv).exit_code == EXIT_USAGE


class TestBoundCommands:
    """Tests for `phi x y` and `psi x y`"""

    def test_phi_json(self, run_cli):
        """Test phi with its witness"""
        result = run_cli('phi', 1, 0.5, '--witness', '--format', 'json')
        assert result.exit_code == EXIT_OK
        document = json.loads(result.stdout)
        rows = rows_by_quantity(result.stdout)
        assert rows['phi_squared'] == pytest.approx(15.125, rel=1e-12)
        assert rows['phi'] == pytest.approx(math.sqrt(15.125), rel=1e-12)
        assert document['meta']['branch'] == 'C2'
        assert document['meta']['witness'] == '+P[t=-0.75]'

    def test_phi_verify(self, run_cli):
        """Test the extreme-point cross-check of phi"""
        result = run_cli('phi', 1, 0.3, '--verify', '--format', 'json')
        assert result.exit_code == EXIT_OK
        rows = rows_by_quantity(result.stdout)
        assert rows['phi_squared'] == pytest.approx(1 / 0.09 + 4 * 1.09, rel=1e-12)
        assert rows['relative_gap'] <= 1e-6

    def test_phi_far_from_the_origin(self, run_cli):
        """Test that phi is reported where phi_squared overflows"""
        result = run_cli('phi', 1e200, 0, '--format', 'json')
        assert result.exit_code == EXIT_OK
        rows = rows_by_quantity(result.stdout)
        assert rows['phi_squared'] is None
        assert rows['phi'] == pytest.approx(1e200 * math.sqrt(52 + 32 * SQRT2), rel=1e-12)

    @pytest.mark.parametrize('command', ['phi', 'psi'])
    @pytest.mark.parametrize('x, y', [(1, 2), (0, 0), (-1, 0)])
    def test_bad_points(self, run_cli, command, x, y):
        """Test points outside the sector and the origin"""
        result = run_cli(command, x, y)
        assert result.exit_code == EXIT_USAGE
        assert result.stderr.startswith('error:')

    def test_psi_values(self, run_cli):
        """Test psi and its per-family split"""
        result = run_cli('psi', 1, 0.5, '--format', 'json')
        assert result.exit_code == EXIT_OK
        rows = rows_by_quantity(result.stdout)
        assert rows['psi'] == pytest.approx(3.0, rel=1e-12)
        assert rows['psi_p_family'] == pytest.approx(3.0, rel=1e-12)
        assert rows['psi_q_family'] == pytest.approx(2 * SQRT2, rel=1e-12)

    def test_psi_on_the_diagonal(self, run_cli):
        """Test psi at the right end of the arc"""
        result = run_cli('psi', 0.7071067811865476, 0.7071067811865476, '--format', 'json')
        assert result.exit_code == EXIT_OK
        assert rows_by_quantity(result.stdout)['psi'] == pytest.approx(4 + SQRT2, rel=1e-12)

    def test_psi_verify_with_witness(self, run_cli):
        """Test psi at (1, 0) against the scan"""
        result = run_cli('psi', 1, 0, '--verify', '--witness', '--format', 'json')
        assert result.exit_code == EXIT_OK
        document = json.loads(result.stdout)
        assert rows_by_quantity(result.stdout)['psi'] == pytest.approx(4 + SQRT2, rel=1e-12)
        assert document['meta']['witness'] == '+P[t=1.0]'

    def test_human_output(self, run_cli):
        """Test the default human-readable output"""
        result = run_cli('psi', 1, 0.5)
        assert result.stdout.startswith('psi at (1.0, 0.5)\n  branch: 3\n')


class TestFigureAndTableCommands:
    """Tests for `figure n` and `table`"""

    @pytest.mark.parametrize('n, header', [
        (1, 'lambda,C1,C6,C7'),
        (9, 'lambda,D21,D22,D51'),
        (13, 'lambda,D82,D83,D102'),
    ])
    def test_figure_header(self, run_cli, n, header):
        """Test the CSV header of several figures"""
        result = run_cli('figure', n, '--format', 'csv')
        assert result.exit_code == EXIT_OK
        lines = result.stdout.splitlines()
        assert lines[0] == header
        assert len(lines) == 1 + 65

    def test_figure_samples(self, run_cli):
        """Test the --samples override"""
        result = run_cli('figure', 2, '--samples', 5, '--format', 'csv')
        assert len(result.stdout.splitlines()) == 6

    @pytest.mark.parametrize('argv', [('figure', 14), ('figure', 0), ('figure', 1, '--samples', 1)])
    def test_bad_figure(self, run_cli, argv):
        """Test that unknown figures and degenerate grids exit 2"""
        assert run_cli(*argv).exit_code == EXIT_USAGE

    def test_sectors_table(self, run_cli):
        """Test the computed column of the sectors table"""
        result = run_cli('table', 'sectors', '--format', 'json')
        assert result.exit_code == EXIT_OK
        rows = json.loads(result.stdout)['rows']
        assert len(rows) == 12
        cells = {(row['constant'], row['domain']): row for row in rows}
        assert cells[('markov', 'D(pi/4)')]['value'] == pytest.approx(52 + 32 * SQRT2)
        assert cells[('markov', 'D(pi/4)')]['source'] == 'computed'
        assert cells[('polarization', 'D(pi/4)')]['value'] == pytest.approx(2 + SQRT2 / 2)
        assert cells[('unconditional', 'D(pi/4)')]['value'] == pytest.approx(5 + 4 * SQRT2, rel=1e-9)
        assert cells[('unconditional', 'square')]['value'] == 5.0

    def test_lp_table(self, run_cli):
        """Test the reference-only lp table"""
        result = run_cli('table', 'lp', '--format', 'csv')
        assert result.exit_code == EXIT_OK
        lines = result.stdout.splitlines()
        assert lines[0] == 'constant,domain,value,expression,source,witness'
        assert len(lines) == 10

    def test_unknown_table(self, run_cli):
        """Test that unknown tables are usage errors"""
        assert run_cli('table', 'cubes').exit_code == EXIT_USAGE


class TestConstantsCommand:
    """Tests for `constants`"""

    @pytest.mark.slow
    def test_constants(self, run_cli):
        """Test closed forms and oracles of the three sharp constants"""
        result = run_cli('constants', '--format', 'json')
        assert result.exit_code == EXIT_OK
        rows = {row['constant']: row for row in json.loads(result.stdout)['rows']}
        assert rows['markov_squared']['closed_form'] == pytest.approx(52 + 32 * SQRT2)
        assert rows['polarization']['closed_form'] == pytest.approx(2 + SQRT2 / 2)
        assert rows['unconditional']['closed_form'] == pytest.approx(5 + 4 * SQRT2)
        assert all(row['gap'] <= 1e-6 for row in rows.values())


class TestVerifyCommand:
    """Tests for `verify`"""

    def test_only_selected_checks(self, run_cli):
        """Test that --only runs exactly the named checks"""
        result = run_cli('verify', '--only', 'phi_continuity', '--only', 'psi_continuity', '--format', 'json')
        assert result.exit_code == EXIT_OK
        document = json.loads(result.stdout)
        assert [row['check'] for row in document['rows']] == ['phi_continuity', 'psi_continuity']
        assert document['meta']['failures'] == 0

    def test_deterministic(self, run_cli):
        """Test byte-identical output for identical seed and samples"""
        argv = ('verify', '--only', 'norm_oracle', '--only', 'unconditional_sampled',
                '--samples', 20, '--seed', 7, '--format', 'csv')
        first, second = run_cli(*argv), run_cli(*argv)
        assert first.exit_code == EXIT_OK
        assert first.stdout == second.stdout

    def test_unknown_check(self, run_cli):
        """Test that unknown check names exit 2"""
        result = run_cli('verify', '--only', 'no_such_check')
        assert result.exit_code == EXIT_USAGE
        assert 'no_such_check' in result.stderr

    def test_negative_tolerance_fails(self, run_cli):
        """Test that an unattainable tolerance exits 3"""
        result = run_cli('verify', '--only', 'psi_max', '--tolerance', '-1', '--format', 'json')
        assert result.exit_code == EXIT_VERIFICATION
        document = json.loads(result.stdout)
        assert document['passed'] is False
        assert document['rows'][0]['status'] == 'FAIL'

    def test_failing_checks_named_on_stderr(self, run_cli):
        """Test that the failing checks are listed after the report is written"""
        result = run_cli('verify', '--only', 'phi_continuity', '--only', 'psi_continuity',
                         '--tolerance', '-1', '--format', 'csv')
        assert result.exit_code == EXIT_VERIFICATION
        assert result.stdout.startswith('check,status,gap,tolerance,detail\n')
        assert result.stderr == 'verify: 2 check(s) outside tolerance: phi_continuity, psi_continuity\n'

    @pytest.mark.slow
    def test_full_suite_with_defaults(self):
        """Test that every check passes at the production configuration"""
        report = VerificationSuite(Config, samples=100).run()
        assert report.passed, [(r.name, r.gap, r.detail) for r in report.failures]


class TestOutputOptions:
    """Tests for options shared by every command"""

    def test_metrics(self, run_cli):
        """Test Prometheus metrics on stderr"""
        result = run_cli('norm', 1, 1, 0, '--metrics')
        assert result.exit_code == EXIT_OK
        assert 'sector_cli_commands_total' in result.stderr

    def test_out_file(self, run_cli, tmp_path):
        """Test that --out receives the same bytes as stdout"""
        path = tmp_path / 'figure.csv'
        result = run_cli('figure', 5, '--format', 'csv', '--out', str(path))
        assert result.exit_code == EXIT_OK
        assert path.read_text(encoding='utf-8') == result.stdout

    def test_help_exits_zero(self, run_cli):
        """Test that --help is not an error"""
        assert run_cli('--help').exit_code == EXIT_OK

    def test_missing_command(self, run_cli):
        """Test that a missing subcommand is a usage error"""
        assert run_cli().exit_code == EXIT_USAGE

    def test_verbosity_levels(self):
        """Test -v and -vv lower the log level"""
        import logging
        configure_logging('WARNING', 1)
        assert logging.getLogger().level == logging.INFO
        configure_logging('WARNING', 2)
        assert logging.getLogger().level == logging.DEBUG
        configure_logging('ERROR', 0)
        assert logging.getLogger().level == logging.ERROR
