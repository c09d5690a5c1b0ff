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

""" Exceptions raised by rmtorus. """

from typing import Optional


class RmTorusError(Exception):
    """ Base class of all errors raised by this package. """


# surd

class PerfectSquare(RmTorusError, ValueError):

    def __init__(self, D: int):
        super().__init__(f'radicand {D} is a perfect square, the value is rational')
        self.D = D


class ZeroDenominator(RmTorusError, ValueError):
    pass


class NegativeDiscriminant(RmTorusError, ValueError):
    pass


class RationalRoots(RmTorusError, ValueError):
    pass


class DegenerateLinear(RmTorusError, ValueError):
    pass


class FieldMismatch(RmTorusError, ValueError):

    def __init__(self, D1: int, D2: int):
        super().__init__(f'elements of Q(sqrt({D1})) and Q(sqrt({D2})) cannot be combined')
        self.D1 = D1
        self.D2 = D2


class DivisionByZero(RmTorusError, ZeroDivisionError):
    pass


class SingularMatrix(RmTorusError, ValueError):
    pass


class SurdSyntaxError(RmTorusError, ValueError):
    """ Malformed surd literal; ``position`` is the 0-based offset of the offending character. """

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f'{message} at position {position}: {text!r}')
        self.text = text
        self.position = position


# cfrac

class CFSyntaxError(RmTorusError, ValueError):

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f'{message} at position {position}: {text!r}')
        self.text = text
        self.position = position


class NotEnoughTerms(RmTorusError, ValueError):
    pass


class RationalExpansion(RmTorusError, ValueError):
    pass


# nctorus

class RationalTheta(RmTorusError, ValueError):
    pass


class NonPositiveScale(RmTorusError, ValueError):
    pass


# functor

class InvalidOrder(RmTorusError, ValueError):
    pass


class NoNontrivialGenerator(RmTorusError):
    pass


class NonPositivePeriod(RmTorusError, ValueError):
    pass


# harness

class SingularLambda(RmTorusError, ValueError):
    pass


class DatasetError(RmTorusError):
    """ Base class of errors found in curve datasets. """


class DatasetParseError(DatasetError):

    def __init__(self, path: str, message: str, line: int, column: int):
        super().__init__(f'{path}:{line}:{column}: {message}')
        self.path = path
        self.line = line
        self.column = column


class SchemaError(DatasetError):

    def __init__(self, field: str, reason: str, index: Optional[int] = None, label: Optional[str] = None):
        where = ''
        if label is not None:
            where = f'record {label!r}: '
        elif index is not None:
            where = f'record #{index}: '
        super().__init__(f'{where}field {field!r}: {reason}')
        self.field = field
        self.reason = reason
        self.index = index
        self.label = label


class DuplicateLabel(DatasetError):

    def __init__(self, label: str):
        super().__init__(f'duplicate label {label!r}')
        self.label = label
