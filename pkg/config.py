import os
from dotenv import load_dotenv


def _env_int(name: str, default: int) -> int:
    return int(os.environ.get(name, default))


def _env_float(name: str, default: float) -> float:
    return float(os.environ.get(name, default))


class Config:
    """Configuration class to manage scan sizes, tolerances and logging"""

    # Load environment variables
    load_dotenv()

    # Oracle configuration
    SCAN_GRID = _env_int('SECTOR_GRID', 4096)
    REFINE_ITERS = _env_int('SECTOR_REFINE_ITERS', 60)
    EXTREME_RESOLUTION = _env_int('SECTOR_EXTREME_RESOLUTION', 2048)
    BILINEAR_GRID = _env_int('SECTOR_BILINEAR_GRID', 512)
    BILINEAR_REFINE_ITERS = _env_int('SECTOR_BILINEAR_REFINE_ITERS', 40)

    # Randomized verification corpus
    SEED = _env_int('SECTOR_SEED', 42)
    SAMPLES = _env_int('SECTOR_SAMPLES', 1000)
    TOLERANCE = _env_float('SECTOR_TOLERANCE', 1e-6)
    COEFF_BOUND = _env_float('SECTOR_COEFF_BOUND', 10.0)

    # Output
    FIGURE_SAMPLES = _env_int('SECTOR_FIGURE_SAMPLES', 513)
    LOG_LEVEL = os.environ.get('SECTOR_LOG_LEVEL', 'WARNING').upper()

    @classmethod
    def get_log_level(cls) -> str:
        """Get the logging level name"""
        return cls.LOG_LEVEL

    @classmethod
    def get_seed(cls) -> int:
        """Get the seed of the randomized corpus"""
        return cls.SEED

    @classmethod
    def scan_config(cls, grid=None, refine_iters=None, seed=None):
        """
        Build the oracle ScanConfig from the settings

        Args:
            grid: Optional override of SCAN_GRID
            refine_iters: Optional override of REFINE_ITERS
            seed: Optional override of SEED

        Returns:
            ScanConfig instance
        """
        from models.scan_config import ScanConfig
        return ScanConfig(
            grid=cls.SCAN_GRID if grid is None else grid,
            refine_iters=cls.REFINE_ITERS if refine_iters is None else refine_iters,
            seed=cls.SEED if seed is None else seed,
        )


class TestConfig(Config):
    """Configuration class for the test suite: smaller scans, same seed"""
    __test__ = False
    SCAN_GRID = 1024
    EXTREME_RESOLUTION = 1024
    BILINEAR_GRID = 128
    BILINEAR_REFINE_ITERS = 40
    SAMPLES = 200
    FIGURE_SAMPLES = 65
    LOG_LEVEL = 'WARNING'
