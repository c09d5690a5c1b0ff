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


import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmtorus import Mat2Z, QElem, QuadSurd, RootSelector, Sign, compose, format_qelem, format_surd, \
    parse_surd_literal, qelem_arith, qelem_sign, surd_conjugate, surd_floor, surd_from_quadratic, surd_mobius, surd_new
from rmtorus.errors import DegenerateLinear, DivisionByZero, FieldMismatch, NegativeDiscriminant, PerfectSquare, \
    RationalRoots, SingularMatrix, SurdSyntaxError, ZeroDenominator
from rmtorus.surd import is_square

from .strategies import bezout, field_elements, surds, unimodular


def float_sign(u: QElem) -> Sign:
    with mpmath.workdps(60):
        value = mpmath.mpf(u.x.numerator) / u.x.denominator \
            + mpmath.mpf(u.y.numerator) / u.y.denominator * mpmath.sqrt(u.D)
        return Sign((value > 0) - (value < 0))


def approx(x: QuadSurd) -> mpmath.mpf:
    with mpmath.workdps(60):
        return (x.P + mpmath.sqrt(x.D)) / x.Q


#####

def test_surd_new():
    assert surd_new(0, 54, 1) == QuadSurd(0, 54, 1)
    y = surd_new(0, 2, 1)
    assert surd_new(y.P, y.D, y.Q) == y

    x = surd_new(1, 8, 2)
    # 2 does not divide 8 - 1, rescaled to (2 + sqrt(32)) / 4
    assert (x.P, x.D, x.Q) == (2, 32, 4)
    assert abs(approx(x) - mpmath.mpf('1.9142135623730950488')) < 1e-12


def test_surd_new_canonical():
    # the same value written three ways
    assert QuadSurd(2, 8, 2) == QuadSurd(1, 2, 1)
    assert QuadSurd(-2, 8, -2) == QuadSurd(-1, 2, -1)
    assert QuadSurd(0, 8, 2) == QuadSurd(0, 2, 1)
    assert QuadSurd(3, 45, 6) == QuadSurd(1, 5, 2)


def test_surd_new_errors():
    with pytest.raises(ZeroDenominator):
        surd_new(1, 2, 0)
    with pytest.raises(PerfectSquare):
        surd_new(1, 4, 3)
    with pytest.raises(PerfectSquare):
        surd_new(0, 0, 1)
    with pytest.raises(NegativeDiscriminant):
        surd_new(0, -3, 1)


@given(surds())
def test_canonical_idempotent(x):
    assert QuadSurd(x.P, x.D, x.Q) == x
    assert (x.D - x.P * x.P) % x.Q == 0


@given(surds(max_D=500, max_P=20, max_Q=20), st.integers(2, 5))
def test_canonical_unique(x, n):
    # scaled representatives of the same value collapse onto one triple
    assert QuadSurd(n * x.P, n * n * x.D, n * x.Q) == x


def test_surd_from_quadratic():
    assert surd_from_quadratic(1, 1, -1, RootSelector.LARGER) == QuadSurd(-1, 5, 2)
    assert surd_from_quadratic(1, 1, -1, RootSelector.SMALLER) == QuadSurd(1, 5, -2)
    assert surd_from_quadratic(1, 0, -2) == QuadSurd(0, 2, 1)
    assert surd_from_quadratic(-1, 0, 2, 'larger') == QuadSurd(0, 2, 1)
    # both roots negative: the larger one
    assert surd_from_quadratic(1, 4, 2) == QuadSurd(-2, 2, 1)

    for which in RootSelector:
        with pytest.raises(RationalRoots):
            surd_from_quadratic(1, 0, -4, which)
    with pytest.raises(DegenerateLinear):
        surd_from_quadratic(0, 1, 1)
    with pytest.raises(NegativeDiscriminant):
        surd_from_quadratic(1, 0, 1)


@given(st.integers(-30, 30).filter(lambda n: n != 0), st.integers(-30, 30), st.integers(-30, 30))
def test_surd_from_quadratic_roots(A, B, C):
    disc = B * B - 4 * A * C
    if disc <= 0 or is_square(disc):
        return
    for which in RootSelector:
        t = surd_from_quadratic(A, B, C, which).to_qelem()
        assert A * t * t + B * t + C == 0
    larger = surd_from_quadratic(A, B, C, RootSelector.LARGER)
    smaller = surd_from_quadratic(A, B, C, RootSelector.SMALLER)
    assert smaller < larger
    assert larger.conjugate() == smaller


def test_qelem_arith():
    u = QElem(1, 1, 2)
    v = QElem(-1, 1, 2)
    assert qelem_arith('mul', u, v) == QElem(1, 0, 2)
    assert qelem_arith('div', QElem(1, 0, 5), QElem(0, 1, 5)) == QElem(0, Fraction(1, 5), 5)
    assert qelem_arith('add', u, v) == QElem(0, 2, 2)
    assert qelem_arith('sub', u, v) == 2

    k = QuadSurd(3, 5, 2).to_qelem()
    theta = QuadSurd(-1, 5, 2).to_qelem()
    assert qelem_arith('mul', k, theta) == QuadSurd(1, 5, 2).to_qelem()

    with pytest.raises(ValueError):
        qelem_arith('pow', u, v)
    with pytest.raises(DivisionByZero):
        qelem_arith('div', u, QElem(0, 0, 2))


def test_qelem_fields():
    # sqrt(8) = 2 sqrt(2)
    assert QElem(0, 1, 8) == QElem(0, 2, 2)
    assert QElem(1, 1, 8) - QElem(0, 2, 2) == 1
    assert hash(QElem(0, 1, 8)) == hash(QElem(0, 2, 2))
    assert QElem(3, 0, 7) == QElem(3, 0, 2)
    assert QElem(0, 1, 2) != QElem(0, 1, 3)

    with pytest.raises(FieldMismatch):
        QElem(0, 1, 2) + QElem(0, 1, 3)
    # rationals live in every field
    assert QElem(2, 0, 3) * QElem(0, 1, 2) == QElem(0, 2, 2)

    with pytest.raises(PerfectSquare):
        QElem(1, 1, 9)


@given(field_elements(D=7), field_elements(D=7), field_elements(D=7))
def test_qelem_field_laws(u, v, w):
    assert u + v == v + u
    assert u * v == v * u
    assert (u + v) * w == u * w + v * w
    assert (u * v).norm() == u.norm() * v.norm()
    if v:
        assert (u / v) * v == u


def test_qelem_sign():
    assert qelem_sign(QElem(-1, 1, 2)) is Sign.POSITIVE
    assert qelem_sign(QElem(0, 0, 3)) is Sign.ZERO
    assert qelem_sign(QElem(7, -5, 2)) is Sign.NEGATIVE
    assert qelem_sign(QElem(-7, 5, 2)) is Sign.POSITIVE
    assert qelem_sign(QElem(Fraction(-1, 3), 0, 2)) is Sign.NEGATIVE


@settings(max_examples=10 ** 4)
@given(field_elements(bound=10 ** 6))
def test_qelem_sign_oracle(u):
    assert qelem_sign(u) is float_sign(u)


@settings(max_examples=10 ** 4)
@given(st.integers(2, 10 ** 6).filter(lambda n: not is_square(n)), st.integers(1, 10 ** 12), st.integers(0, 1),
       st.booleans())
def test_qelem_sign_near_zero(D, q, offset, flip):
    # p - q sqrt(D) with p/q a rational approximation of sqrt(D), decided by squaring
    p = math.isqrt(q * q * D) + offset
    expected = Sign.POSITIVE if p * p > q * q * D else Sign.NEGATIVE
    u = QElem(p, -q, D)
    if flip:
        u = QElem(-p, q, D)
        expected = Sign(-expected.value)
    assert qelem_sign(u) is expected


def test_comparisons():
    assert QuadSurd(0, 2, 1) > 1
    assert QuadSurd(0, 2, 1) < Fraction(3, 2)
    assert QuadSurd(0, 2, 1) <= QuadSurd(1, 2, 1)
    assert QuadSurd(0, 2, -1) < 0
    assert -QuadSurd(0, 2, 1) == QuadSurd(0, 2, -1)
    assert QuadSurd(0, 54, 1) + 7 == QuadSurd(7, 54, 1)
    assert 1 + QuadSurd(0, 2, 1) - 1 == QuadSurd(0, 2, 1)


def test_surd_floor():
    assert surd_floor(QuadSurd(0, 54, 1)) == 7
    assert surd_floor(QuadSurd(-1, 5, 2)) == 0
    assert surd_floor(QuadSurd(0, 2, -1)) == -2
    assert surd_floor(QuadSurd(1, 5, -2)) == -2
    assert QuadSurd(7, 54, 1).floor() == 14


@given(surds())
def test_surd_floor_bracket(x):
    n = surd_floor(x)
    assert n <= x < n + 1


def test_surd_mobius():
    sqrt2 = QuadSurd(0, 2, 1)
    assert surd_mobius(QuadSurd(0, 54, 1), Mat2Z(1, 0, 1, 1)) == QuadSurd(1, 54, 1)
    assert surd_mobius(sqrt2, Mat2Z.identity()) == sqrt2
    assert surd_mobius(QuadSurd(-1, 5, 2), Mat2Z(0, 1, 1, 0)) == QuadSurd(1, 5, 2)
    assert surd_mobius(sqrt2, Mat2Z(2, 0, 0, 2)) == sqrt2
    assert QuadSurd(0, 2, 1).mobius(Mat2Z(1, 0, 1, 1)) == QuadSurd(1, 2, 1)

    with pytest.raises(SingularMatrix):
        surd_mobius(sqrt2, Mat2Z(1, 2, 2, 4))


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_bezout(a, b):
    x, y = bezout(a, b)
    assert a * x + b * y == math.gcd(a, b)


@given(unimodular())
def test_unimodular_matrices(M):
    assert M.is_unimodular()
    assert abs(M.det()) == 1

@given(surds(max_D=1000), unimodular(bound=10), unimodular(bound=10))
def test_surd_mobius_composition(x, first, second):
    once = surd_mobius(surd_mobius(x, first), second)
    assert once == surd_mobius(x, compose(second, first))

    t = x.to_qelem()
    expected = (first.c + first.d * t) / (first.a + first.b * t)
    assert surd_mobius(x, first).to_qelem() == expected


@given(surds(), unimodular())
def test_surd_mobius_inverse(x, M):
    assert surd_mobius(surd_mobius(x, M), M.inverse()) == x


def test_mat2z():
    M = Mat2Z(2, 1, 1, 1)
    assert M.det() == 1
    assert M.trace() == 3
    assert M @ M.inverse() == Mat2Z.identity()
    assert Mat2Z(0, 1, 1, 0).inverse() == Mat2Z(0, 1, 1, 0)
    assert str(M) == '(2,1;1,1)'
    assert M.rows() == ((2, 1), (1, 1))
    with pytest.raises(SingularMatrix):
        Mat2Z(2, 0, 0, 1).inverse()


def test_surd_conjugate():
    assert surd_conjugate(QuadSurd(0, 2, 1)) == QuadSurd(0, 2, -1)
    assert surd_conjugate(QuadSurd(1, 5, 2)) == QuadSurd(-1, 5, -2)
    x = QuadSurd(3, 7, 2)
    assert x.conjugate().conjugate() == x
    assert x.to_qelem() * x.conjugate().to_qelem() == x.to_qelem().norm()


def test_parse_surd_literal():
    assert parse_surd_literal('sqrt(54)') == QuadSurd(0, 54, 1)
    assert parse_surd_literal('7/3') == Fraction(7, 3)
    assert parse_surd_literal('-4') == Fraction(-4)
    assert parse_surd_literal('(-1+sqrt(5))/2') == QuadSurd(-1, 5, 2)
    assert parse_surd_literal(' ( 1 - sqrt(5) ) / 2 ') == QuadSurd(-1, 5, -2)
    assert parse_surd_literal('(1+sqrt(5))/-2') == QuadSurd(1, 5, -2)


@pytest.mark.parametrize('text, position', [
    ('', 0),
    ('sqrt(', 5),
    ('sqrt(2', 6),
    ('(1+sqrt(5))/0', 12),
    ('7/0', 2),
    ('1.5', 1),
    ('sqrt(2) + 1', 8),
    ('(1*sqrt(2))/1', 2),
])
def test_parse_surd_literal_errors(text, position):
    with pytest.raises(SurdSyntaxError) as info:
        parse_surd_literal(text)
    assert info.value.position == position


def test_format():
    assert format_surd(QuadSurd(0, 54, 1)) == 'sqrt(54)'
    assert format_surd(QuadSurd(-1, 5, 2)) == '(-1+sqrt(5))/2'
    assert format_surd(QuadSurd(0, 2, -1)) == '(0-sqrt(2))/1'
    assert format_qelem(QElem(Fraction(1, 2), 0, 5)) == '1/2'
    assert format_qelem(QElem(0, 3, 6)) == 'sqrt(54)'


@given(surds())
def test_format_parse(x):
    assert parse_surd_literal(format_surd(x)) == x
