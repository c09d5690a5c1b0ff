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

""" From complex multiplication to real multiplication.

An integer matrix ``(a, b; c, d)`` acts on a rank 2 module ``Z lambda_1 + Z lambda_2`` by
``lambda_1' = a lambda_1 + b lambda_2``, ``lambda_2' = c lambda_1 + d lambda_2``. If the
image is ``k`` times the module, ``theta = lambda_2 / lambda_1`` solves a quadratic
equation; :func:`lemma2_classify` sorts every matrix into the possible cases. Applied to
the matrix of an endomorphism of a CM lattice, it yields the quadratic irrationality
``theta`` of the associated noncommutative torus.
"""

import enum
import logging
from fractions import Fraction
from typing import List, Tuple, Union

import attrs

from .errors import InvalidOrder, NoNontrivialGenerator, NonPositivePeriod
from .surd import Mat2Z, QElem, QuadSurd, RationalLike, format_qelem, format_surd, is_square, \
    squarefree_decomposition, surd_from_quadratic, surd_mobius

logger = logging.getLogger(__name__)


class Lemma2Outcome:
    """ Base class of the classification results. """

    tag: str = ''

    def is_quadratic(self) -> bool:
        return False

    def describe(self) -> str:
        return self.tag


@attrs.frozen
class Case1(Lemma2Outcome):
    """ ``Delta > 0`` not a square: ``b theta^2 + (a - d) theta - c = 0``. """

    theta: QuadSurd
    k: QElem
    delta: int
    tag = 'case1'

    def is_quadratic(self) -> bool:
        return True

    def satisfies(self, M: Mat2Z) -> bool:
        """ ``k = a + b theta`` and ``k theta = c + d theta``. """
        t = self.theta.to_qelem()
        return self.k == M.a + M.b * t and self.k * t == M.c + M.d * t

    def describe(self) -> str:
        return f'{self.tag} theta={format_surd(self.theta)} k={format_qelem(self.k)} delta={self.delta}'


@attrs.frozen
class Case4(Lemma2Outcome):
    """ ``Delta < 0``, ``Delta'`` not a square: ``b theta^2 + (a + d) theta + c = 0``.

    The second basis vector is negated, hence ``k theta = -(c + d theta)``.
    """

    theta: QuadSurd
    k: QElem
    delta_prime: int
    delta: int
    tag = 'case4'

    def is_quadratic(self) -> bool:
        return True

    def satisfies(self, M: Mat2Z) -> bool:
        t = self.theta.to_qelem()
        return self.k == M.a + M.b * t and self.k * t == -(M.c + M.d * t)

    def describe(self) -> str:
        return (f'{self.tag} theta={format_surd(self.theta)} k={format_qelem(self.k)} '
                f'delta={self.delta} delta_prime={self.delta_prime}')


class RejectedCase(str, enum.Enum):
    CASE2 = '2'
    CASE5 = '5'
    B0_LINEAR = 'b0-linear'


@attrs.frozen
class RationalRejected(Lemma2Outcome):
    """ The only solutions theta are rational. """

    case: RejectedCase
    tag = 'rational-rejected'

    def describe(self) -> str:
        return f'{self.tag} case={self.case.value}'


@attrs.frozen
class RankDegenerate(Lemma2Outcome):
    """ ``Delta = 0``: double rational root, the image has rank 1. """

    tag = 'rank-degenerate'


@attrs.frozen
class EmptySolution(Lemma2Outcome):
    """ ``b = 0``, ``a = d``, ``c != 0``: no theta at all. """

    tag = 'empty-solution'


@attrs.frozen
class TrivialInteger(Lemma2Outcome):
    """ ``b = c = 0``, ``a = d``: every irrational theta, ``k = a``. """

    k: int
    tag = 'trivial-integer'

    def describe(self) -> str:
        return f'{self.tag} k={self.k}'


Outcome = Union[Case1, Case4, RationalRejected, RankDegenerate, EmptySolution, TrivialInteger]


def lemma2_classify(M: Mat2Z) -> Outcome:
    """ Classifies ``M`` by the discriminants ``Delta = (a+d)^2 - 4 det M`` and
    ``Delta' = (a+d)^2 - 4bc``. Quadratic cases pick theta positive-preferred. """
    a, b, c, d = M.a, M.b, M.c, M.d
    outcome: Outcome
    if b != 0:
        delta = (a + d) ** 2 - 4 * (a * d - b * c)
        delta_prime = (a + d) ** 2 - 4 * b * c
        if delta > 0:
            if is_square(delta):
                outcome = RationalRejected(RejectedCase.CASE2)
            else:
                theta = surd_from_quadratic(b, a - d, -c)
                outcome = Case1(theta, a + b * theta.to_qelem(), delta)
        elif delta == 0:
            outcome = RankDegenerate()
        else:
            # Delta < 0 forces bc < 0
            assert delta_prime > 0, f'Delta={delta} < 0 but Delta\'={delta_prime} for {M}'
            if is_square(delta_prime):
                outcome = RationalRejected(RejectedCase.CASE5)
            else:
                theta = surd_from_quadratic(b, a + d, c)
                outcome = Case4(theta, a + b * theta.to_qelem(), delta_prime, delta)
    elif a != d:
        outcome = RationalRejected(RejectedCase.B0_LINEAR)
    elif c != 0:
        outcome = EmptySolution()
    else:
        outcome = TrivialInteger(a)
    logger.debug('classified %s as %s', M, outcome.tag)
    return outcome


def isogeny_transport(theta: QuadSurd, M: Mat2Z) -> QuadSurd:
    """ ``theta' = (c + d theta) / (a + b theta)``; unimodular ``M`` keep the stable class. """
    return surd_mobius(theta, M)


class OrderForm(str, enum.Enum):
    SQRT = 'sqrt'
    HALF = 'half'


def _check_order(instance: 'CmOrder', attribute: 'attrs.Attribute[int]', d: int) -> None:
    if d <= 0:
        raise InvalidOrder(f'CM discriminant parameter must be positive, got {d}')
    if squarefree_decomposition(d)[0] != 1:
        raise InvalidOrder(f'{d} is not squarefree')


@attrs.frozen
class CmOrder:
    """ The order ``Z[omega]`` of ``Q(sqrt(-d))`` with ``omega = sqrt(-d)`` or ``(1 + sqrt(-d))/2``. """

    d: int = attrs.field(converter=int, validator=_check_order)
    form: OrderForm = attrs.field(converter=OrderForm, default=OrderForm.SQRT)

    def __attrs_post_init__(self) -> None:
        if self.form is OrderForm.HALF and self.d % 4 != 3:
            raise InvalidOrder(f'(1+sqrt(-{self.d}))/2 is not integral, half form needs d = 3 mod 4')

    def __str__(self) -> str:
        if self.form is OrderForm.HALF:
            return f'Z[(1+sqrt(-{self.d}))/2]'
        return f'Z[sqrt(-{self.d})]'


def cm_generator_matrix(order: CmOrder) -> Mat2Z:
    """ Matrix of multiplication by omega on the basis ``{1, omega}``. """
    if order.form is OrderForm.HALF:
        # omega^2 = omega - (1 + d)/4
        return Mat2Z(0, 1, -(1 + order.d) // 4, 1)
    return Mat2Z(0, 1, -order.d, 0)


@attrs.frozen
class RealMultiplication:
    theta: QuadSurd
    k: QElem
    generator: str
    matrix: Mat2Z
    outcome: Union[Case1, Case4]


def real_multiplication_theta(order: CmOrder) -> RealMultiplication:
    """ Classifies the endomorphism omega, falling back to ``1 + omega`` when omega is
    degenerate. """
    omega = cm_generator_matrix(order)
    candidates: List[Tuple[str, Mat2Z]] = [('omega', omega), ('1+omega', omega + Mat2Z.identity())]
    for name, M in candidates:
        outcome = lemma2_classify(M)
        if isinstance(outcome, (Case1, Case4)):
            return RealMultiplication(outcome.theta, outcome.k, name, M, outcome)
        logger.info('generator %s of %s is degenerate (%s), trying next', name, order, outcome.describe())
    raise NoNontrivialGenerator(f'neither omega nor 1+omega of {order} yields a quadratic theta')


@attrs.frozen
class FoliationParams:
    mu: Fraction
    theta: Union[Fraction, QuadSurd]


def foliation_params(lambda1: RationalLike, lambda2: Union[RationalLike, QuadSurd]) -> FoliationParams:
    """ ``mu = lambda_1`` and ``theta = lambda_2 / lambda_1`` for positive periods. """
    lambda1 = Fraction(lambda1)
    if lambda1 <= 0:
        raise NonPositivePeriod(f'period lambda1={lambda1} must be positive')
    if isinstance(lambda2, QuadSurd):
        if not lambda2 > 0:
            raise NonPositivePeriod(f'period lambda2={lambda2} must be positive')
        return FoliationParams(lambda1, QuadSurd.from_qelem(lambda2.to_qelem() / lambda1))
    lambda2 = Fraction(lambda2)
    if lambda2 <= 0:
        raise NonPositivePeriod(f'period lambda2={lambda2} must be positive')
    return FoliationParams(lambda1, lambda2 / lambda1)
