#   Copyright 2026 rmtorus developers
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.

""" Tabulates ``c(A_theta)`` against ``rank + 1`` for a curve dataset.

The report never enforces the relation: ``agrees`` is informational only.
"""

import enum
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence

import attrs

from ..errors import RmTorusError
from ..functor import real_multiplication_theta
from ..nctorus import arithmetic_complexity, torus_new
from ..surd import format_surd
from .dataset import CurveRecord

logger = logging.getLogger(__name__)

TSV_COLUMNS = ('label', 'theta', 'generator', 'complexity', 'predicted_rank', 'known_rank', 'agrees')


class ReportFormat(str, enum.Enum):
    JSON = 'json'
    TSV = 'tsv'


@attrs.frozen
class ConjectureRow:
    label: str
    theta_display: Optional[str]
    generator_used: Optional[str]
    complexity: Optional[int]
    predicted_rank: Optional[int]
    known_rank: int
    agrees: Optional[bool]
    error: Optional[str] = None

    def is_error(self) -> bool:
        return self.error is not None

    def to_json(self) -> Dict[str, Any]:
        return attrs.asdict(self)


def evaluate_record(record: CurveRecord) -> ConjectureRow:
    try:
        rm = real_multiplication_theta(record.order)
        complexity = arithmetic_complexity(torus_new(rm.theta))
    except RmTorusError as e:
        logger.warning('record %s: %s', record.label, e)
        return ConjectureRow(record.label, None, None, None, None, record.rank, None, str(e))

    predicted = complexity - 1
    row = ConjectureRow(record.label, format_surd(rm.theta), rm.generator, complexity, predicted,
                        record.rank, predicted == record.rank)
    if not row.agrees:
        logger.info('record %s: complexity %d predicts rank %d, published rank is %d',
                    record.label, complexity, predicted, record.rank)
    return row


def conjecture_report(records: Sequence[CurveRecord], jobs: int = 1) -> List[ConjectureRow]:
    """ One row per record, in input order. Failing records give error rows. """
    if jobs <= 1:
        return [evaluate_record(record) for record in records]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(evaluate_record, records))


def _tsv_cell(value: Any) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def format_report(rows: Sequence[ConjectureRow], fmt: ReportFormat = ReportFormat.TSV) -> str:
    if ReportFormat(fmt) is ReportFormat.JSON:
        return json.dumps([row.to_json() for row in rows], indent=2) + '\n'

    lines = ['\t'.join(TSV_COLUMNS)]
    for row in rows:
        if row.is_error():
            cells = [row.label, f'error: {row.error}', None, None, None, row.known_rank, None]
        else:
            cells = [row.label, row.theta_display, row.generator_used, row.complexity,
                     row.predicted_rank, row.known_rank, row.agrees]
        lines.append('\t'.join(_tsv_cell(cell) for cell in cells))
    return '\n'.join(lines) + '\n'
