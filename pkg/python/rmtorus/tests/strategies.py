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


""" Hypothesis strategies for surds and integer matrices. """

import math
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from rmtorus import K0Class, Mat2Z, QElem, QuadSurd
from rmtorus.surd import is_square


@st.composite
def surds(draw, max_D=5000, max_P=100, max_Q=100):
    """ Canonical triples with ``Q | D - P^2``, so no rescaling takes place. """
    D = draw(st.integers(2, max_D).filter(lambda n: not is_square(n)))
    P = draw(st.integers(-max_P, max_P))
    divisors = [q for q in sympy.divisors(abs(D - P * P)) if q <= max_Q]
    Q = draw(st.sampled_from(divisors))
    if draw(st.booleans()):
        Q = -Q
    return QuadSurd(P, D, Q)


def bezout(a, b):
    """ ``(x, y)`` with ``a x + b y = gcd(a, b) >= 0``. """
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -x0, -y0
    return x0, y0


@st.composite
def unimodular(draw, bound=20):
    """ Matrices of determinant +-1 with first row entries in ``[-bound, bound]``. """
    a = draw(st.integers(-bound, bound))
    b = draw(st.integers(-bound, bound).filter(lambda n: math.gcd(a, n) == 1))
    x, y = bezout(a, b)
    # a x + b y = 1, so (a, b; -y, x) has determinant 1
    t = draw(st.integers(-2, 2))
    c, d = -y + t * a, x + t * b
    if draw(st.booleans()):
        c, d = -c, -d
    return Mat2Z(a, b, c, d)


def rationals(bound=50):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


@st.composite
def field_elements(draw, D=None, bound=50):
    if D is None:
        D = draw(st.integers(2, 200).filter(lambda n: not is_square(n)))
    return QElem(draw(rationals(bound)), draw(rationals(bound)), D)


def k0_classes(bound=10 ** 6):
    return st.builds(K0Class, st.integers(-bound, bound), st.integers(-bound, bound))
