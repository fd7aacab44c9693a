from prometheus_client import Counter, Histogram, Gauge, generate_latest, REGISTRY
from functools import wraps
import logging
import time

logger = logging.getLogger(__name__)

# Metrics definitions
objective_evaluations = Counter(
    'sector_objective_evaluations_total',
    'Total objective evaluations performed by the oracles',
    ['oracle']
)

scan_duration = Histogram(
    'sector_scan_duration_seconds',
    'Oracle scan duration in seconds',
    ['operation']
)

scan_operations = Counter(
    'sector_scan_operations_total',
    'Total oracle scans',
    ['operation', 'status']
)

verification_checks = Counter(
    'sector_verification_checks_total',
    'Total verification checks run',
    ['check', 'status']
)

verification_failures = Gauge(
    'sector_verification_failures',
    'Number of failing checks in the last verification run'
)

commands_total = Counter(
    'sector_cli_commands_total',
    'Total CLI commands dispatched',
    ['command', 'exit_code']
)


def track_scan_operation(operation_name):
    """Decorator to track oracle scans"""
    def decorator(f):
        @wraps(f)
        def wrapper(*args, **kwargs):
            start_time = time.time()
            status = 'success'

            try:
                return f(*args, **kwargs)
            except Exception:
                status = 'error'
                raise
            finally:
                duration = time.time() - start_time
                scan_operations.labels(
                    operation=operation_name,
                    status=status
                ).inc()
                scan_duration.labels(
                    operation=operation_name
                ).observe(duration)

        return wrapper
    return decorator


def count_evaluations(oracle: str, n: int):
    """Add n objective evaluations to the oracle's counter"""
    objective_evaluations.labels(oracle=oracle).inc(n)


def record_check(name: str, passed: bool):
    verification_checks.labels(check=name, status='pass' if passed else 'fail').inc()


def update_verification_failures(count: int):
    """Update the failing-checks gauge"""
    verification_failures.set(count)
    if count:
        logger.warning("Verification run finished with %d failing check(s)", count)


def record_command(command: str, exit_code: int):
    commands_total.labels(command=command, exit_code=str(exit_code)).inc()


def metrics_text() -> str:
    """Prometheus exposition text of every registered metric"""
    return generate_latest(REGISTRY).decode('utf-8')
