import io

import numpy as np
import pytest

from app import create_app
from config import TestConfig
from models.constants import S_MAX
from models.extremal_param import q_family
from oracle.corpus import random_polys as make_random_polys

CORPUS_SIZE = 50


@pytest.fixture
def config():
    """Test configuration: small grids, fixed seed"""
    return TestConfig


@pytest.fixture
def scan_config(config):
    """Oracle resolution used by the tests"""
    return config.scan_config()


@pytest.fixture
def rng(config):
    """Seeded numpy generator"""
    return np.random.default_rng(config.get_seed())


@pytest.fixture
def random_polys(config):
    """Small seeded corpus of nonzero polynomials"""
    return make_random_polys(CORPUS_SIZE, config.get_seed(), config.COEFF_BOUND)


@pytest.fixture
def unit_polys(random_polys):
    """The random corpus projected onto the unit sphere"""
    return [p.normalized() for p in random_polys]


@pytest.fixture
def witness():
    """The extreme polynomial (1, 5+4√2, −4−4√2) attaining every sharp constant"""
    return q_family(S_MAX)


@pytest.fixture
def application(config):
    """Application built with the test configuration"""
    return create_app(config)


class CliResult:
    """Captured outcome of one in-process CLI invocation"""

    def __init__(self, exit_code: int, stdout: str, stderr: str):
        self.exit_code = exit_code
        self.stdout = stdout
        self.stderr = stderr


@pytest.fixture
def run_cli(application):
    """Invoke the CLI in-process, like a test client for the command line"""
    def run(*argv):
        out, err = io.StringIO(), io.StringIO()
        exit_code = application.run([str(a) for a in argv], stdout=out, stderr=err)
        return CliResult(exit_code, out.getvalue(), err.getvalue())
    return run
