import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from exceptions import DomainError
from models.constants import SQRT2

CONSTANT_NAMES = ('markov', 'polarization', 'unconditional')

# The π/4 sector column is never stored here: it is computed live.
COMPUTED_DOMAIN = 'D(pi/4)'


@dataclass(frozen=True)
class ReferenceConstant:
    """A sharp constant of another polynomial space, quoted for comparison"""
    table: str
    domain: str
    constant: str
    value: float
    expression: str
    witness: Optional[Tuple[float, float, float]] = None


_SECTOR_WITNESSES = {
    'simplex': (1.0, 1.0, -6.0),
    'D(pi/2)': (1.0, 1.0, -4.0),
    'square': (1.0, 1.0, -3.0),
}

_RECORDS = [
    # sectors table: simplex, D(π/2), D(π/4) (computed), unit square
    ReferenceConstant('sectors', 'simplex', 'markov', 2 * math.sqrt(10), '2*sqrt(10)', _SECTOR_WITNESSES['simplex']),
    ReferenceConstant('sectors', 'simplex', 'polarization', 3.0, '3', _SECTOR_WITNESSES['simplex']),
    ReferenceConstant('sectors', 'simplex', 'unconditional', 2.0, '2', _SECTOR_WITNESSES['simplex']),
    ReferenceConstant('sectors', 'D(pi/2)', 'markov', 2 * math.sqrt(5), '2*sqrt(5)', _SECTOR_WITNESSES['D(pi/2)']),
    ReferenceConstant('sectors', 'D(pi/2)', 'polarization', 2.0, '2', _SECTOR_WITNESSES['D(pi/2)']),
    ReferenceConstant('sectors', 'D(pi/2)', 'unconditional', 3.0, '3', _SECTOR_WITNESSES['D(pi/2)']),
    ReferenceConstant('sectors', 'square', 'markov', math.sqrt(13), 'sqrt(13)', _SECTOR_WITNESSES['square']),
    ReferenceConstant('sectors', 'square', 'polarization', 1.5, '3/2', _SECTOR_WITNESSES['square']),
    ReferenceConstant('sectors', 'square', 'unconditional', 5.0, '5', _SECTOR_WITNESSES['square']),
    # lp table: 2-homogeneous polynomials on l1^2, l2^2, linf^2
    ReferenceConstant('lp', 'l1', 'markov', 4.0, '4'),
    ReferenceConstant('lp', 'l1', 'polarization', 2.0, '2'),
    ReferenceConstant('lp', 'l1', 'unconditional', (1 + SQRT2) / 2, '(1+sqrt(2))/2'),
    ReferenceConstant('lp', 'l2', 'markov', 2.0, '2'),
    ReferenceConstant('lp', 'l2', 'polarization', 1.0, '1'),
    ReferenceConstant('lp', 'l2', 'unconditional', SQRT2, 'sqrt(2)'),
    ReferenceConstant('lp', 'linf', 'markov', 2 * SQRT2, '2*sqrt(2)'),
    ReferenceConstant('lp', 'linf', 'polarization', 2.0, '2'),
    ReferenceConstant('lp', 'linf', 'unconditional', 1 + SQRT2, '1+sqrt(2)'),
]

TABLE_DOMAINS = {
    'sectors': ('simplex', 'D(pi/2)', COMPUTED_DOMAIN, 'square'),
    'lp': ('l1', 'l2', 'linf'),
}


class ReferenceConstantsRepository:
    """Read-only store of the comparison constants of other polynomial spaces"""

    def __init__(self, records: Optional[List[ReferenceConstant]] = None):
        self.records = list(_RECORDS if records is None else records)

    def tables(self) -> Tuple[str, ...]:
        return tuple(TABLE_DOMAINS)

    def domains(self, table: str) -> Tuple[str, ...]:
        """Column order of a table, the computed column included"""
        if table not in TABLE_DOMAINS:
            raise DomainError(f"Unknown table {table!r}; expected one of {sorted(TABLE_DOMAINS)}")
        return TABLE_DOMAINS[table]

    def get_table(self, table: str) -> List[ReferenceConstant]:
        """
        Retrieve every stored constant of a table

        Args:
            table: 'sectors' or 'lp'

        Returns:
            List of ReferenceConstant in column order
        """
        order = self.domains(table)
        rows = [record for record in self.records if record.table == table]
        return sorted(rows, key=lambda r: (CONSTANT_NAMES.index(r.constant), order.index(r.domain)))
