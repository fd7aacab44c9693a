import logging
import sys
from typing import List, Optional, TextIO

from config import Config
from controllers.command_controller import CommandController
from exceptions import DomainError, NonFiniteValueError, SectorError, VerificationError
from models.output_record import OutputFormat
from monitoring.metrics import metrics_text, record_command
from repositories.extremal_repository import get_repository
from repositories.reference_constants import ReferenceConstantsRepository

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFICATION = 3


def configure_logging(level_name: str, verbose: int = 0):
    """Send log records to stderr at the configured level, lowered by -v/-vv"""
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, level_name.upper(), logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')


class SectorApplication:
    """Main application class following the Application Factory pattern"""

    def __init__(self, config_class=Config, repository=None, references=None):
        """
        Initialize the application

        Args:
            config_class: Configuration class to use (default: Config)
            repository: Optional ExtremalRepository instance (for testing)
            references: Optional ReferenceConstantsRepository instance (for testing)
        """
        self.config = config_class
        self.repository = repository
        self.references = references
        self.controller = None
        self._setup()

    def _setup(self):
        """Wire repositories into the command controller"""
        if not self.repository:
            self.repository = get_repository(self.config.EXTREME_RESOLUTION, self.config.REFINE_ITERS)
        if not self.references:
            self.references = ReferenceConstantsRepository()
        self.controller = CommandController(self.config, self.repository, self.references)

    @property
    def parser(self):
        return self.controller.parser

    def run(self, argv: Optional[List[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
        """
        Parse argv, dispatch the command and write its output

        Args:
            argv: Arguments without the program name (default: sys.argv[1:])
            stdout: Stream receiving the data (default: sys.stdout)
            stderr: Stream receiving diagnostics (default: sys.stderr)

        Returns:
            0 on success, 2 on usage or domain errors, 3 on verification failures
        """
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr

        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

        configure_logging(self.config.get_log_level(), args.verbose)
        exit_code = self._dispatch(args, stdout, stderr)
        record_command(args.command, exit_code)

        if args.metrics:
            stderr.write(metrics_text())
        return exit_code

    def _dispatch(self, args, stdout: TextIO, stderr: TextIO) -> int:
        try:
            record = args.handler(args)
            self._write(record, args, stdout)
            record.raise_for_failures()
        except DomainError as e:
            stderr.write(f"error: {e}\n")
            return EXIT_USAGE
        except (VerificationError, NonFiniteValueError) as e:
            stderr.write(f"{args.command}: {e}\n")
            return EXIT_VERIFICATION
        except SectorError as e:
            logger.exception("Command %s failed", args.command)
            stderr.write(f"error: {e}\n")
            return EXIT_VERIFICATION
        return EXIT_OK

    @staticmethod
    def _write(record, args, stdout: TextIO):
        """Render the record once and send the same text to stdout and --out"""
        output = record.render(OutputFormat(args.format))
        stdout.write(output)
        if args.out:
            with open(args.out, 'w', encoding='utf-8', newline='') as handle:
                handle.write(output)


def create_app(config_class=Config, repository=None, references=None) -> SectorApplication:
    """
    Application factory function

    Args:
        config_class: Configuration class to use
        repository: Optional ExtremalRepository instance (for testing)
        references: Optional ReferenceConstantsRepository instance (for testing)

    Returns:
        SectorApplication instance
    """
    return SectorApplication(config_class, repository, references)


def main(argv: Optional[List[str]] = None) -> int:
    return create_app().run(argv)


if __name__ == '__main__':
    sys.exit(main())
