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

""" Curve datasets: JSON arrays of CM curves with externally published ranks.

Each record has the keys ``label`` (string), ``cm_d`` (integer > 0), ``form``
(``"sqrt"`` or ``"half"``), ``rank`` (integer >= 0), ``rank_source`` (string) and the
optional keys ``lambda`` (string rational ``"p/q"``) and ``notes`` (string). Ranks are
never computed here; ``rank_source`` records where each one was taken from.
"""

import json
import logging
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import attrs
import jsonschema

from ..errors import DatasetParseError, DuplicateLabel, InvalidOrder, RmTorusError, SchemaError
from ..functor import CmOrder, OrderForm
from ..surd import format_rational, parse_surd_literal

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ('label', 'cm_d', 'form', 'rank', 'rank_source')
OPTIONAL_KEYS = ('lambda', 'notes')

# ``x-reasons`` maps a failing keyword to the reason reported in ``SchemaError``
_STRING = {'type': 'string', 'x-reasons': {'type': 'expected a string'}}
_NONEMPTY = {'type': 'string', 'pattern': r'\S',
             'x-reasons': {'type': 'expected a string', 'pattern': 'must not be empty'}}

RECORD_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'properties': {
        'label': _NONEMPTY,
        'cm_d': {'type': 'integer', 'minimum': 1,
                 'x-reasons': {'type': 'expected an integer', 'minimum': 'must be positive'}},
        'form': {'enum': [form.value for form in OrderForm],
                 'x-reasons': {'enum': 'expected "sqrt" or "half"'}},
        'rank': {'type': 'integer', 'minimum': 0,
                 'x-reasons': {'type': 'expected an integer', 'minimum': 'negative'}},
        'rank_source': _NONEMPTY,
        'lambda': {'type': 'string', 'x-reasons': {'type': 'expected a rational as a string "p/q"'}},
        'notes': _STRING,
    },
    'required': list(REQUIRED_KEYS),
    'additionalProperties': False,
}

DATASET_SCHEMA: Dict[str, Any] = {
    'type': 'array',
    'items': RECORD_SCHEMA,
}

_validator = jsonschema.Draft7Validator(DATASET_SCHEMA)
_FIELDS = REQUIRED_KEYS + OPTIONAL_KEYS


@attrs.frozen
class CurveRecord:
    label: str
    order: CmOrder
    rank: int
    rank_source: str
    lam: Optional[Fraction] = None
    notes: Optional[str] = None

    @property
    def cm_d(self) -> int:
        return self.order.d

    @property
    def form(self) -> OrderForm:
        return self.order.form

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'label': self.label,
            'cm_d': self.order.d,
            'form': self.order.form.value,
            'rank': self.rank,
            'rank_source': self.rank_source,
        }
        if self.lam is not None:
            data['lambda'] = format_rational(self.lam)
        if self.notes is not None:
            data['notes'] = self.notes
        return data


def _label_of(obj: Any) -> Optional[str]:
    if isinstance(obj, dict) and isinstance(obj.get('label'), str) and obj['label'].strip():
        return str(obj['label'])
    return None


def _priority(error: jsonschema.ValidationError) -> Any:
    path = list(error.path)
    if len(path) < 2:
        rank = {'type': 0, 'required': 1, 'additionalProperties': 2}.get(error.validator, 3)
        return path, rank, 0
    return path[:1], 4, _FIELDS.index(path[1]) if path[1] in _FIELDS else len(_FIELDS)


def _schema_error(error: jsonschema.ValidationError, data: Any) -> SchemaError:
    path = list(error.path)
    if not path:
        return SchemaError('<root>', 'expected a JSON array of records')
    index = path[0]
    obj = data[index]
    if len(path) == 1:
        if error.validator == 'type':
            return SchemaError('<record>', 'expected a JSON object', index)
        if error.validator == 'required':
            missing = next(key for key in REQUIRED_KEYS if key not in obj)
            return SchemaError(missing, 'missing', index, _label_of(obj))
        if error.validator == 'additionalProperties':
            unknown = next(key for key in obj if key not in _FIELDS)
            return SchemaError(unknown, 'unknown field', index, _label_of(obj))
        return SchemaError('<record>', error.message, index, _label_of(obj))
    field = str(path[1])
    reason = error.schema.get('x-reasons', {}).get(error.validator, error.message)
    return SchemaError(field, reason, index, None if field == 'label' else _label_of(obj))


def validate_dataset(data: Any) -> None:
    """ Checks ``data`` against ``DATASET_SCHEMA``, raising the first error in file order. """
    errors = sorted(_validator.iter_errors(data), key=_priority)
    if errors:
        raise _schema_error(errors[0], data)


def parse_record(obj: Dict[str, Any], index: int) -> CurveRecord:
    """ Builds a record from an object that already passed ``RECORD_SCHEMA``. """
    label = obj['label']
    try:
        order = CmOrder(int(obj['cm_d']), obj['form'])
    except InvalidOrder as e:
        raise SchemaError('cm_d', str(e), index, label) from e

    lam = None
    if 'lambda' in obj:
        try:
            parsed = parse_surd_literal(obj['lambda'])
        except RmTorusError as e:
            raise SchemaError('lambda', str(e), index, label) from e
        if not isinstance(parsed, Fraction):
            raise SchemaError('lambda', 'must be rational', index, label)
        lam = parsed

    return CurveRecord(label, order, int(obj['rank']), obj['rank_source'], lam, obj.get('notes'))


def parse_dataset(data: Any) -> List[CurveRecord]:
    validate_dataset(data)
    records = []
    labels = set()
    for index, obj in enumerate(data):
        record = parse_record(obj, index)
        if record.label in labels:
            raise DuplicateLabel(record.label)
        labels.add(record.label)
        records.append(record)
    return records


def load_dataset(path: Union[str, Path]) -> List[CurveRecord]:
    """ Reads and validates a dataset file; records keep file order. """
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode('utf-8')
    except UnicodeDecodeError as e:
        head = raw[:e.start]
        line = head.count(b'\n') + 1
        column = e.start - (head.rfind(b'\n') + 1) + 1
        raise DatasetParseError(str(path), f'invalid UTF-8 at byte {e.start}: {e.reason}', line, column) from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DatasetParseError(str(path), e.msg, e.lineno, e.colno) from e
    records = parse_dataset(data)
    logger.info('loaded %d records from %s', len(records), path)
    return records


def dump_dataset(records: Sequence[CurveRecord]) -> str:
    return json.dumps([record.to_json() for record in records], indent=2, ensure_ascii=False) + '\n'


def bundled_dataset_path() -> Path:
    """ Path of the curve table shipped with the package. """
    return Path(str(resources.files('rmtorus').joinpath('data', 'cm_curves.json')))
