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

r""" Exact arithmetic in real quadratic fields.

A real quadratic irrationality is stored as a :class:`QuadSurd` ``(P + sqrt(D)) / Q``
with ``Q | D - P^2``. General field elements ``x + y sqrt(D)`` with rational ``x, y``
are :class:`QElem`. Integer matrices act on surds by
``theta' = (c + d theta) / (a + b theta)``, the row convention of
``gamma'_1 = a gamma_1 + b gamma_2``.

All values are immutable and all arithmetic is exact; floating point is never used.
"""

import enum
import functools
import math
import operator
import re
from fractions import Fraction
from typing import Callable, Dict, List, Literal, Tuple, Union

import attrs
import sympy

from .errors import (DegenerateLinear, DivisionByZero, FieldMismatch, NegativeDiscriminant, PerfectSquare,
                     RationalRoots, SingularMatrix, SurdSyntaxError, ZeroDenominator)

RationalLike = Union[int, Fraction]


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __str__(self) -> str:
        return self.name.lower()


class RootSelector(str, enum.Enum):
    LARGER = 'larger'
    SMALLER = 'smaller'
    POSITIVE_PREFERRED = 'positive-preferred'


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


@functools.lru_cache(maxsize=4096)
def squarefree_decomposition(n: int) -> Tuple[int, int]:
    """ Returns ``(s, k)`` with ``n = s^2 k`` and ``k`` squarefree, for ``n > 0``. """
    s, k = 1, 1
    for p, e in sympy.factorint(n).items():
        s *= p ** (e // 2)
        k *= p ** (e % 2)
    return s, k


def _sign(n: Union[int, Fraction]) -> Sign:
    return Sign((n > 0) - (n < 0))


@attrs.frozen
class Mat2Z:
    """ Integer matrix ``(a, b; c, d)``. """

    a: int = attrs.field(converter=int)
    b: int = attrs.field(converter=int)
    c: int = attrs.field(converter=int)
    d: int = attrs.field(converter=int)

    @staticmethod
    def identity() -> 'Mat2Z':
        return Mat2Z(1, 0, 0, 1)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def __matmul__(self, other: 'Mat2Z') -> 'Mat2Z':
        return Mat2Z(self.a * other.a + self.b * other.c,
                     self.a * other.b + self.b * other.d,
                     self.c * other.a + self.d * other.c,
                     self.c * other.b + self.d * other.d)

    def __add__(self, other: 'Mat2Z') -> 'Mat2Z':
        return Mat2Z(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __neg__(self) -> 'Mat2Z':
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> 'Mat2Z':
        """ Inverse in GL(2, Z); only defined for determinant +-1. """
        det = self.det()
        if abs(det) != 1:
            raise SingularMatrix(f'{self} is not invertible over Z (det={det})')
        return Mat2Z(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def __str__(self) -> str:
        return f'({self.a},{self.b};{self.c},{self.d})'


def compose(second: Mat2Z, first: Mat2Z) -> Mat2Z:
    """ Matrix of "apply ``first``, then ``second``" under :func:`surd_mobius`. """
    return second @ first


def same_field(D1: int, D2: int) -> bool:
    """ ``Q(sqrt(D1)) = Q(sqrt(D2))``, decided without factoring. """
    return D1 == D2 or is_square(D1 * D2)


@attrs.frozen(eq=False)
class QElem:
    """ Element ``x + y sqrt(D)`` of the real quadratic field ``Q(sqrt(D))``.

    The radicand is kept as given. Elements over radicands of the same field (``D1 D2`` a
    square) are rewritten onto a common radicand before combining, and compare by value.
    Elements with ``y = 0`` are rational and combine with elements of any field.
    """

    x: Fraction = attrs.field(converter=Fraction)
    y: Fraction = attrs.field(converter=Fraction)
    D: int = attrs.field(converter=int)

    def __attrs_post_init__(self) -> None:
        if self.D < 0:
            raise NegativeDiscriminant(f'radicand {self.D} is negative')
        if is_square(self.D):
            raise PerfectSquare(self.D)

    @staticmethod
    def rational(value: RationalLike, D: int) -> 'QElem':
        return QElem(value, 0, D)

    @staticmethod
    def from_surd(theta: 'QuadSurd') -> 'QElem':
        return QElem(Fraction(theta.P, theta.Q), Fraction(1, theta.Q), theta.D)

    def is_rational(self) -> bool:
        return self.y == 0

    def with_radicand(self, D: int) -> 'QElem':
        """ The same number written as ``x + y' sqrt(D)``. """
        if D == self.D:
            return self
        if self.y == 0:
            return QElem(self.x, 0, D)
        if not same_field(self.D, D):
            raise FieldMismatch(self.D, D)
        # sqrt(D_self) = sqrt(D_self D) / D
        return QElem(self.x, self.y * Fraction(math.isqrt(self.D * D), D), D)

    def _lift(self, other: Union['QElem', RationalLike]) -> Tuple['QElem', 'QElem']:
        if isinstance(other, (int, Fraction)):
            return self, QElem(other, 0, self.D)
        if not isinstance(other, QElem):
            raise TypeError(f'cannot combine QElem with {type(other).__name__}')
        if self.y == 0 and other.y != 0:
            return self.with_radicand(other.D), other
        return self, other.with_radicand(self.D)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        if not isinstance(other, QElem):
            return NotImplemented
        if self.y != 0 and other.y != 0 and not same_field(self.D, other.D):
            return False
        u, v = self._lift(other)
        return u.x == v.x and u.y == v.y

    def __hash__(self) -> int:
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y * self.y * self.D, _sign(self.y)))

    def __add__(self, other: Union['QElem', RationalLike]) -> 'QElem':
        u, v = self._lift(other)
        return QElem(u.x + v.x, u.y + v.y, u.D)

    def __radd__(self, other: RationalLike) -> 'QElem':
        return self + other

    def __sub__(self, other: Union['QElem', RationalLike]) -> 'QElem':
        u, v = self._lift(other)
        return QElem(u.x - v.x, u.y - v.y, u.D)

    def __rsub__(self, other: RationalLike) -> 'QElem':
        return -self + other

    def __mul__(self, other: Union['QElem', RationalLike]) -> 'QElem':
        u, v = self._lift(other)
        return QElem(u.x * v.x + u.D * u.y * v.y, u.x * v.y + u.y * v.x, u.D)

    def __rmul__(self, other: RationalLike) -> 'QElem':
        return self * other

    def __truediv__(self, other: Union['QElem', RationalLike]) -> 'QElem':
        u, v = self._lift(other)
        norm = v.norm()
        if norm == 0:
            raise DivisionByZero(f'division of {format_qelem(u)} by zero')
        conj = v.conjugate()
        return QElem((u.x * conj.x + u.D * u.y * conj.y) / norm, (u.x * conj.y + u.y * conj.x) / norm, u.D)

    def __rtruediv__(self, other: RationalLike) -> 'QElem':
        return QElem(other, 0, self.D) / self

    def __neg__(self) -> 'QElem':
        return QElem(-self.x, -self.y, self.D)

    def conjugate(self) -> 'QElem':
        return QElem(self.x, -self.y, self.D)

    def norm(self) -> Fraction:
        return self.x * self.x - self.D * self.y * self.y

    def sign(self) -> Sign:
        return qelem_sign(self)

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def __lt__(self, other: Union['QElem', RationalLike]) -> bool:
        return (self - other).sign() is Sign.NEGATIVE

    def __le__(self, other: Union['QElem', RationalLike]) -> bool:
        return (self - other).sign() is not Sign.POSITIVE

    def __gt__(self, other: Union['QElem', RationalLike]) -> bool:
        return (self - other).sign() is Sign.POSITIVE

    def __ge__(self, other: Union['QElem', RationalLike]) -> bool:
        return (self - other).sign() is not Sign.NEGATIVE

    def __str__(self) -> str:
        return format_qelem(self)


def _canonical(P: int, D: int, Q: int) -> Tuple[int, int, int]:
    if Q == 0:
        raise ZeroDenominator('surd denominator must be nonzero')
    if D < 0:
        raise NegativeDiscriminant(f'radicand {D} is negative')
    if is_square(D):
        raise PerfectSquare(D)
    if (D - P * P) % Q != 0:
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
    g = math.gcd(P, Q, (D - P * P) // Q)
    if g > 1:
        P, D, Q = P // g, D // (g * g), Q // g
    return P, D, Q


@attrs.frozen
class QuadSurd:
    """ Real quadratic irrationality ``(P + sqrt(D)) / Q``.

    Construction canonicalizes the triple: if ``Q`` does not divide ``D - P^2`` the
    triple is rescaled by ``|Q|``, then the common factor ``gcd(P, Q, (D - P^2)/Q)`` is
    divided out. Equal values therefore have equal fields.
    """

    P: int = attrs.field(converter=int)
    D: int = attrs.field(converter=int)
    Q: int = attrs.field(converter=int)

    def __attrs_post_init__(self) -> None:
        P, D, Q = _canonical(self.P, self.D, self.Q)
        object.__setattr__(self, 'P', P)
        object.__setattr__(self, 'D', D)
        object.__setattr__(self, 'Q', Q)

    @staticmethod
    def from_qelem(value: QElem) -> 'QuadSurd':
        """ Converts an irrational field element into surd form. """
        if value.y == 0:
            raise RationalRoots(f'{format_qelem(value)} is rational')
        Q = math.lcm(value.x.denominator, value.y.denominator)
        P = int(value.x * Q)
        s = int(value.y * Q)
        if s > 0:
            return QuadSurd(P, s * s * value.D, Q)
        return QuadSurd(-P, s * s * value.D, -Q)

    def to_qelem(self) -> QElem:
        return QElem.from_surd(self)

    def conjugate(self) -> 'QuadSurd':
        return surd_conjugate(self)

    def floor(self) -> int:
        return surd_floor(self)

    def sign(self) -> Sign:
        return qelem_sign(self.to_qelem())

    def mobius(self, M: Mat2Z) -> 'QuadSurd':
        return surd_mobius(self, M)

    def __neg__(self) -> 'QuadSurd':
        return QuadSurd(self.P, self.D, -self.Q)

    def __add__(self, n: int) -> 'QuadSurd':
        if not isinstance(n, int):
            return NotImplemented
        return QuadSurd(self.P + n * self.Q, self.D, self.Q)

    def __radd__(self, n: int) -> 'QuadSurd':
        return self + n

    def __sub__(self, n: int) -> 'QuadSurd':
        if not isinstance(n, int):
            return NotImplemented
        return self + (-n)

    def __lt__(self, other: Union['QuadSurd', QElem, RationalLike]) -> bool:
        return self.to_qelem() < _as_qelem(other, self.D)

    def __le__(self, other: Union['QuadSurd', QElem, RationalLike]) -> bool:
        return self.to_qelem() <= _as_qelem(other, self.D)

    def __gt__(self, other: Union['QuadSurd', QElem, RationalLike]) -> bool:
        return self.to_qelem() > _as_qelem(other, self.D)

    def __ge__(self, other: Union['QuadSurd', QElem, RationalLike]) -> bool:
        return self.to_qelem() >= _as_qelem(other, self.D)

    def __str__(self) -> str:
        return format_surd(self)


def _as_qelem(value: Union[QuadSurd, QElem, RationalLike], D: int) -> QElem:
    if isinstance(value, QuadSurd):
        return value.to_qelem()
    if isinstance(value, QElem):
        return value
    return QElem(value, 0, D)


def surd_new(P: int, D: int, Q: int) -> QuadSurd:
    return QuadSurd(P, D, Q)


def surd_from_quadratic(A: int, B: int, C: int,
                        which: RootSelector = RootSelector.POSITIVE_PREFERRED) -> QuadSurd:
    """ Root of ``A t^2 + B t + C = 0`` chosen by ``which``.

    ``positive-preferred`` takes the positive root if exactly one root is positive and
    the larger root otherwise.
    """
    if A == 0:
        raise DegenerateLinear(f'{B}t + {C} = 0 is not quadratic')
    disc = B * B - 4 * A * C
    if disc < 0:
        raise NegativeDiscriminant(f'discriminant {disc} of {A}t^2 + {B}t + {C} is negative')
    if is_square(disc):
        raise RationalRoots(f'discriminant {disc} of {A}t^2 + {B}t + {C} is a perfect square')

    plus = QuadSurd(-B, disc, 2 * A)
    minus = QuadSurd(B, disc, -2 * A)
    larger, smaller = (plus, minus) if A > 0 else (minus, plus)

    which = RootSelector(which)
    if which is RootSelector.LARGER:
        return larger
    if which is RootSelector.SMALLER:
        return smaller
    # a unique positive root is always the larger one
    return larger


def qelem_arith(op: Literal['add', 'sub', 'mul', 'div'], u: QElem, v: QElem) -> QElem:
    ops: Dict[str, Callable[[QElem, QElem], QElem]] = {
        'add': operator.add,
        'sub': operator.sub,
        'mul': operator.mul,
        'div': operator.truediv,
    }
    try:
        func = ops[op]
    except KeyError:
        raise ValueError(f'unknown field operation {op!r}') from None
    return func(u, v)


def qelem_sign(u: QElem) -> Sign:
    """ Exact sign of ``x + y sqrt(D)``.

    With mixed signs of ``x`` and ``y`` the term of larger square wins; ``x^2 = D y^2``
    cannot hold for nonzero rationals since ``D`` is not a square.
    """
    sx, sy = _sign(u.x), _sign(u.y)
    if sy is Sign.ZERO:
        return sx
    if sx is Sign.ZERO or sx is sy:
        return sy
    return sx if u.x * u.x > u.D * u.y * u.y else sy


def surd_floor(x: QuadSurd) -> int:
    """ Greatest integer ``n <= x``, from ``isqrt(D)`` alone. """
    s = math.isqrt(x.D)
    if x.Q > 0:
        return (x.P + s) // x.Q
    return (-x.P - s - 1) // -x.Q


def surd_mobius(x: QuadSurd, M: Mat2Z) -> QuadSurd:
    """ ``(c + d x) / (a + b x)`` for ``M = (a, b; c, d)``.

    Applying ``M1`` and then ``M2`` equals applying ``compose(M2, M1) = M2 @ M1``.
    """
    det = M.det()
    if det == 0:
        raise SingularMatrix(f'{M} is singular')
    # (A + d sqrt(D)) / (B + b sqrt(D)), multiplied through by the conjugate of the denominator
    A = M.c * x.Q + M.d * x.P
    B = M.a * x.Q + M.b * x.P
    N = B * B - M.b * M.b * x.D
    X = A * B - M.b * M.d * x.D
    s = x.Q * det
    if s > 0:
        return QuadSurd(X, s * s * x.D, N)
    return QuadSurd(-X, s * s * x.D, -N)


def surd_conjugate(x: QuadSurd) -> QuadSurd:
    return QuadSurd(-x.P, x.D, -x.Q)


def format_rational(r: RationalLike) -> str:
    return str(Fraction(r))


def format_surd(x: QuadSurd) -> str:
    if x.P == 0 and x.Q == 1:
        return f'sqrt({x.D})'
    if x.Q > 0:
        return f'({x.P}+sqrt({x.D}))/{x.Q}'
    return f'({-x.P}-sqrt({x.D}))/{-x.Q}'


def format_qelem(u: QElem) -> str:
    if u.y == 0:
        return format_rational(u.x)
    return format_surd(QuadSurd.from_qelem(u))


SURD_GRAMMAR = '''\
expr     := rational | surd
surd     := "sqrt(" uint ")" | "(" int ("+"|"-") "sqrt(" uint ")" ")/" nzint
rational := int ["/" nzint]'''

_TOKEN = re.compile(r'(?P<num>\d+)|(?P<sqrt>sqrt)|(?P<op>[()+\-/])')


class _SurdParser:

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if m is None:
                raise SurdSyntaxError('unexpected character', text, pos)
            kind = m.lastgroup or 'op'
            self.tokens.append((kind, m.group(), pos))
            pos = m.end()
        self.idx = 0

    def _peek(self) -> Tuple[str, str, int]:
        if self.idx < len(self.tokens):
            return self.tokens[self.idx]
        return 'end', '', len(self.text)

    def _expect(self, value: str) -> None:
        _, tok, pos = self._peek()
        if tok != value:
            raise SurdSyntaxError(f'expected {value!r}', self.text, pos)
        self.idx += 1

    def _uint(self) -> int:
        kind, tok, pos = self._peek()
        if kind != 'num':
            raise SurdSyntaxError('expected an unsigned integer', self.text, pos)
        self.idx += 1
        return int(tok)

    def _int(self) -> int:
        _, tok, _ = self._peek()
        if tok in ('+', '-'):
            self.idx += 1
            value = self._uint()
            return -value if tok == '-' else value
        return self._uint()

    def _nzint(self) -> int:
        pos = self._peek()[2]
        value = self._int()
        if value == 0:
            raise SurdSyntaxError('denominator must be nonzero', self.text, pos)
        return value

    def _sqrt(self) -> int:
        self._expect('sqrt')
        self._expect('(')
        D = self._uint()
        self._expect(')')
        return D

    def _end(self) -> None:
        kind, _, pos = self._peek()
        if kind != 'end':
            raise SurdSyntaxError('trailing input', self.text, pos)

    def parse(self) -> Union[QuadSurd, Fraction]:
        kind, tok, pos = self._peek()
        if kind == 'end':
            raise SurdSyntaxError('empty literal', self.text, pos)
        if tok == 'sqrt':
            D = self._sqrt()
            self._end()
            return QuadSurd(0, D, 1)
        if tok == '(':
            self.idx += 1
            P = self._int()
            _, sep, sep_pos = self._peek()
            if sep not in ('+', '-'):
                raise SurdSyntaxError("expected '+' or '-'", self.text, sep_pos)
            self.idx += 1
            D = self._sqrt()
            self._expect(')')
            self._expect('/')
            Q = self._nzint()
            self._end()
            if sep == '+':
                return QuadSurd(P, D, Q)
            return QuadSurd(-P, D, -Q)
        numerator = self._int()
        denominator = 1
        if self._peek()[1] == '/':
            self.idx += 1
            denominator = self._nzint()
        self._end()
        return Fraction(numerator, denominator)


def parse_surd_literal(text: str) -> Union[QuadSurd, Fraction]:
    """ Parses a literal of :data:`SURD_GRAMMAR`; rationals are returned as ``Fraction``. """
    return _SurdParser(text).parse()
