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

from .dataset import DATASET_SCHEMA, CurveRecord, bundled_dataset_path, dump_dataset, load_dataset, parse_dataset, \
    validate_dataset
from .jinv import JConstant, j_invariant_lambda
from .report import ConjectureRow, ReportFormat, conjecture_report, evaluate_record, format_report

__all__ = [
    'DATASET_SCHEMA', 'CurveRecord', 'bundled_dataset_path', 'dump_dataset', 'load_dataset', 'parse_dataset',
    'validate_dataset',
    'JConstant', 'j_invariant_lambda',
    'ConjectureRow', 'ReportFormat', 'conjecture_report', 'evaluate_record', 'format_report',
]
