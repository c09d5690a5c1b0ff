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

""" Invariants of noncommutative tori with real multiplication.

A torus ``A_theta`` is modeled by its quadratic irrational ``theta`` alone: stable
isomorphism, the positive cone of ``K_0 = Z^2`` and the arithmetic complexity are all
functions of ``theta``.
"""

from fractions import Fraction
from typing import Optional, Tuple, Union

import attrs

from .cfrac import CFExpansion, canonical_rotation, cf_matrix, cf_of_surd, cf_tail_equivalent
from .errors import FieldMismatch, NonPositiveScale, RationalTheta
from .surd import Mat2Z, QElem, QuadSurd, RationalLike, Sign, format_surd, same_field


@attrs.frozen
class NcTorus:
    theta: QuadSurd = attrs.field(validator=attrs.validators.instance_of(QuadSurd))

    def expansion(self) -> CFExpansion:
        return cf_of_surd(self.theta)

    def complexity(self) -> int:
        return arithmetic_complexity(self)

    def __str__(self) -> str:
        return f'A_{format_surd(self.theta)}'


@attrs.frozen
class K0Class:
    p: int = attrs.field(converter=int)
    q: int = attrs.field(converter=int)

    def __add__(self, other: 'K0Class') -> 'K0Class':
        return K0Class(self.p + other.p, self.q + other.q)


def _to_field(mu: Union[QElem, RationalLike], theta: QuadSurd) -> QElem:
    if isinstance(mu, QElem):
        return mu
    return QElem(mu, 0, theta.D)


@attrs.frozen
class PseudoLattice:
    """ The module ``mu (Z + theta Z)`` of the real line, ``mu > 0`` in ``Q(sqrt(D))``. """

    mu: QElem
    theta: QuadSurd

    def __init__(self, mu: Union[QElem, RationalLike], theta: QuadSurd):
        self.__attrs_init__(_to_field(mu, theta), theta)  # type: ignore[attr-defined]

    def __attrs_post_init__(self) -> None:
        if self.mu.sign() is not Sign.POSITIVE:
            raise NonPositiveScale(f'scale {self.mu} of a pseudo-lattice must be positive')
        if not self.mu.is_rational() and not same_field(self.mu.D, self.theta.D):
            raise FieldMismatch(self.mu.D, self.theta.D)

    def basis(self) -> Tuple[QElem, QElem]:
        return self.mu, self.mu * self.theta.to_qelem()


def torus_new(theta: Union[QuadSurd, RationalLike]) -> NcTorus:
    if not isinstance(theta, QuadSurd):
        raise RationalTheta(f'theta = {theta} is rational, no noncommutative torus with real multiplication')
    return NcTorus(theta)


def arithmetic_complexity(t: NcTorus) -> int:
    """ Length of the minimal period of the continued fraction of theta. """
    return len(cf_of_surd(t.theta).period)


def normalized_period(t: NcTorus, canonicalize: bool = True) -> Tuple[Fraction, ...]:
    """ The period divided by its first entry.

    With ``canonicalize`` the period is first rotated to its lexicographically smallest
    rotation, which makes the result independent of where the period starts.
    """
    period = cf_of_surd(t.theta).period
    if canonicalize:
        period = canonical_rotation(period)
    return tuple(Fraction(a, period[0]) for a in period)


def stably_isomorphic(t1: NcTorus, t2: NcTorus) -> bool:
    return cf_tail_equivalent(t1.theta, t2.theta)


def k0_positive(t: NcTorus, x: K0Class) -> bool:
    """ Membership of ``(p, q)`` in the positive cone ``p + theta q >= 0``. """
    return (x.p + x.q * t.theta.to_qelem()).sign() is not Sign.NEGATIVE


def _coordinates(value: QElem, theta: QElem) -> Optional[Tuple[int, int]]:
    # value = a + b theta with theta irrational
    value = value.with_radicand(theta.D)
    b = value.y / theta.y
    a = value.x - b * theta.x
    if a.denominator != 1 or b.denominator != 1:
        return None
    return int(a), int(b)


def module_equal(m1: PseudoLattice, m2: PseudoLattice) -> bool:
    """ Equality of ``mu1 (Z + theta1 Z)`` and ``mu2 (Z + theta2 Z)`` as subsets of R.

    The basis of ``m2`` is written in the basis ``{mu1, mu1 theta1}``; the modules are equal
    iff the coordinate matrix is integral and unimodular.
    """
    if not same_field(m1.theta.D, m2.theta.D):
        raise FieldMismatch(m1.theta.D, m2.theta.D)
    theta1 = m1.theta.to_qelem()
    first, second = m2.basis()
    row1 = _coordinates(first / m1.mu, theta1)
    row2 = _coordinates(second / m1.mu, theta1)
    if row1 is None or row2 is None:
        return False
    return Mat2Z(*row1, *row2).is_unimodular()


def real_multiplication(t: NcTorus) -> Tuple[Mat2Z, QElem]:
    """ The unimodular matrix fixing theta and its multiplier.

    Returns ``(M, k)`` with ``surd_mobius(theta, M) = theta``, ``k = a + b theta`` and
    ``k theta = c + d theta``; ``k > 1`` is a unit of the field.
    """
    cf = cf_of_surd(t.theta)
    R = cf_matrix(cf.preperiod)
    M = R @ cf_matrix(cf.period) @ R.inverse()
    return M, M.a + M.b * t.theta.to_qelem()
