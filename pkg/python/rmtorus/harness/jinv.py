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

import enum
from fractions import Fraction

from ..errors import SingularLambda
from ..surd import RationalLike


class JConstant(str, enum.Enum):
    STANDARD = 'standard-256'
    REDUCED = 'paper-64'

    @property
    def factor(self) -> int:
        return 256 if self is JConstant.STANDARD else 64


def j_invariant_lambda(lam: RationalLike, constant: JConstant = JConstant.STANDARD) -> Fraction:
    """ j-invariant of the Legendre curve ``y^2 = x (x - 1)(x - lambda)``.

    ``C (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2)`` with ``C = 256``; the
    ``paper-64`` constant gives values a quarter of the classical ones.
    """
    lam = Fraction(lam)
    if lam == 0 or lam == 1:
        raise SingularLambda(f'lambda={lam} gives a singular curve')
    return JConstant(constant).factor * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)
