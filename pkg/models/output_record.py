import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple

import numpy as np
import pandas as pd

from exceptions import VerificationError


class RecordKind(Enum):
    SCALAR = 'scalar'
    CURVE = 'curve'
    TABLE = 'table'
    VERIFICATION = 'verification'


class OutputFormat(Enum):
    HUMAN = 'human'
    CSV = 'csv'
    JSON = 'json'


def _jsonable(value):
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if value is pd.NA or value is None:
        return None
    return value


def _human_cell(value) -> str:
    if isinstance(value, (float, np.floating)):
        return '' if math.isnan(value) else repr(float(value))
    return str(value)


@dataclass
class OutputRecord:
    """Result of a command: a rectangular frame plus free-form metadata"""

    kind: RecordKind
    title: str
    frame: pd.DataFrame
    meta: dict = field(default_factory=dict)
    passed: bool = True
    failures: List[Tuple[str, str]] = field(default_factory=list)

    def raise_for_failures(self):
        """Raise VerificationError when the command's cross-checks did not pass"""
        if not self.passed:
            raise VerificationError(self.failures or [(self.title, 'cross-check outside tolerance')])

    def to_csv(self) -> str:
        """CSV with full-precision floats; missing values are empty cells"""
        return self.frame.to_csv(index=False, lineterminator='\n', na_rep='')

    def to_json(self) -> str:
        """JSON document holding kind, title, metadata and the rows"""
        rows = [
            {column: _jsonable(value) for column, value in row.items()}
            for row in self.frame.to_dict(orient='records')
        ]
        document = {
            'kind': self.kind.value,
            'title': self.title,
            'passed': self.passed,
            'meta': _jsonable(self.meta),
            'rows': rows,
        }
        return json.dumps(document, indent=2, allow_nan=False) + '\n'

    def to_human(self) -> str:
        """Aligned text table preceded by the title and metadata"""
        lines = [self.title]
        for key, value in self.meta.items():
            lines.append(f"  {key}: {_human_cell(value)}")
        if not self.frame.empty:
            formatted = self.frame.apply(lambda column: column.map(_human_cell))
            lines.append(formatted.to_string(index=False))
        return '\n'.join(lines) + '\n'

    def render(self, output_format: OutputFormat) -> str:
        if output_format is OutputFormat.CSV:
            return self.to_csv()
        if output_format is OutputFormat.JSON:
            return self.to_json()
        return self.to_human()
