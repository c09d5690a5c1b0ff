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

""" Regular continued fractions of rationals and real quadratic irrationalities. """

import itertools
import logging
import math
import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

import attrs

from .errors import CFSyntaxError, NegativeDiscriminant, NotEnoughTerms, PerfectSquare, RationalExpansion
from .surd import Mat2Z, QuadSurd, RationalLike, RootSelector, is_square, surd_from_quadratic, surd_mobius

logger = logging.getLogger(__name__)


def _minimal_period(period: Tuple[int, ...]) -> Tuple[int, ...]:
    p = len(period)
    for d in range(1, p):
        if p % d == 0 and period[:d] * (p // d) == period:
            return period[:d]
    return period


def _check_terms(instance: 'CFExpansion', attribute: 'attrs.Attribute[Tuple[int, ...]]',
                 value: Tuple[int, ...]) -> None:
    tail = value if attribute.name == 'period' else value[1:]
    if any(a < 1 for a in tail):
        raise ValueError(f'partial quotients after the first must be positive, got {list(value)}')


@attrs.frozen
class CFExpansion:
    """ Eventually periodic regular continued fraction ``[a0; a1, ..., (b1, ..., bp)]``.

    The expansion is normalized on construction: the period is reduced to its minimal
    length, the preperiod is trimmed while its last entry equals the last entry of the
    period, and finite expansions do not end in 1 (unless they have a single term).
    """

    preperiod: Tuple[int, ...] = attrs.field(converter=tuple, validator=_check_terms)
    period: Tuple[int, ...] = attrs.field(converter=tuple, default=(), validator=_check_terms)

    def __attrs_post_init__(self) -> None:
        pre, period = list(self.preperiod), self.period
        if period:
            period = _minimal_period(period)
            while pre and pre[-1] == period[-1]:
                pre.pop()
                period = period[-1:] + period[:-1]
        else:
            if not pre:
                raise ValueError('a finite continued fraction needs at least one term')
            if len(pre) > 1 and pre[-1] == 1:
                pre.pop()
                pre[-1] += 1
        object.__setattr__(self, 'preperiod', tuple(pre))
        object.__setattr__(self, 'period', period)

    def is_rational(self) -> bool:
        return not self.period

    def terms(self) -> Iterator[int]:
        """ Partial quotients; infinite for irrational expansions. """
        yield from self.preperiod
        if self.period:
            yield from itertools.cycle(self.period)

    def __str__(self) -> str:
        return cf_format(self)


@attrs.frozen
class Convergent:
    p: int
    q: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f'{self.p}/{self.q}'


def cf_of_rational(r: RationalLike) -> CFExpansion:
    r = Fraction(r)
    num, den = r.numerator, r.denominator
    terms = []
    while den != 0:
        a = num // den
        terms.append(a)
        num, den = den, num - a * den
    return CFExpansion(terms)


def cf_of_surd(x: QuadSurd) -> CFExpansion:
    """ Expansion of a quadratic surd by the integer recurrence on ``(P, Q)``.

    ``a = floor((P + sqrt(D)) / Q)``, ``P' = aQ - P``, ``Q' = (D - P'^2) / Q``. The state
    determines the tail value, so the first repeated state closes the minimal period.
    """
    P, Q, D = x.P, x.Q, x.D
    s = math.isqrt(D)
    seen: Dict[Tuple[int, int], int] = {}
    digits: List[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(digits)
        # floor as in surd_floor
        a = (P + s) // Q if Q > 0 else (-P - s - 1) // -Q
        digits.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    logger.debug('expanded %s: %d states, period starts at %d', x, len(digits), start)
    return CFExpansion(digits[:start], digits[start:])


def cf_convergents(cf: CFExpansion, n: int) -> List[Convergent]:
    if n < 1:
        raise ValueError(f'number of convergents must be positive, got {n}')
    if cf.is_rational() and n > len(cf.preperiod):
        raise NotEnoughTerms(f'{cf} has only {len(cf.preperiod)} convergents, {n} requested')
    result = []
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for a in itertools.islice(cf.terms(), n):
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        result.append(Convergent(p, q))
    return result


def cf_matrix(terms: Iterable[int]) -> Mat2Z:
    """ Matrix ``M`` with ``[a0; ..., an, y] = surd_mobius(y, M)``.

    Its entries are ``(q_{n-1}, q_n; p_{n-1}, p_n)``.
    """
    M = Mat2Z.identity()
    for a in terms:
        M = M @ Mat2Z(0, 1, 1, a)
    return M


def cf_to_surd(cf: CFExpansion) -> QuadSurd:
    """ Value of a periodic expansion.

    The purely periodic tail ``y`` is the fixed point ``y > 1`` of the period matrix,
    the preperiod is then applied as a Moebius map.
    """
    if cf.is_rational():
        raise RationalExpansion(f'{cf} is the expansion of a rational number')
    T = cf_matrix(cf.period)
    tail = surd_from_quadratic(T.b, T.a - T.d, -T.c, RootSelector.LARGER)
    if not cf.preperiod:
        return tail
    return surd_mobius(tail, cf_matrix(cf.preperiod))


def is_rotation(first: Sequence[int], second: Sequence[int]) -> bool:
    if len(first) != len(second):
        return False
    a, b = tuple(first), tuple(second)
    return any(b == a[i:] + a[:i] for i in range(len(a)))


def canonical_rotation(period: Sequence[int]) -> Tuple[int, ...]:
    """ Lexicographically smallest cyclic rotation. """
    a = tuple(period)
    return min((a[i:] + a[:i] for i in range(len(a))), default=())


def cf_tail_equivalent(x: QuadSurd, y: QuadSurd) -> bool:
    """ GL(2, Z) equivalence of two surds: their minimal periods are rotations of each other. """
    return is_rotation(cf_of_surd(x).period, cf_of_surd(y).period)


def is_reduced(x: QuadSurd) -> bool:
    """ ``x > 1`` and ``-1 < x' < 0``; exactly the surds with purely periodic expansion. """
    conj = x.conjugate()
    return x > 1 and -1 < conj < 0


def pell_solution(D: int) -> Tuple[int, int, int]:
    """ Smallest positive ``(x, y, n)`` with ``x^2 - D y^2 = n``, ``n = +-1``. """
    if D < 0:
        raise NegativeDiscriminant(f'Pell equation needs a positive D, got {D}')
    if is_square(D):
        raise PerfectSquare(D)
    cf = cf_of_surd(QuadSurd(0, D, 1))
    last = cf_convergents(cf, len(cf.period))[-1]
    return last.p, last.q, last.p * last.p - D * last.q * last.q


def cf_format(cf: CFExpansion) -> str:
    items = [str(a) for a in cf.preperiod]
    if cf.period:
        items.append('(' + ', '.join(str(b) for b in cf.period) + ')')
    if len(items) == 1:
        return f'[{items[0]}]'
    return f'[{items[0]}; ' + ', '.join(items[1:]) + ']'


_CF_TOKEN = re.compile(r'(?P<num>[+-]?\d+)|(?P<op>[\[\];,()])')


def cf_parse(text: str) -> CFExpansion:
    """ Parses the form printed by :func:`cf_format`. """
    tokens: List[Tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _CF_TOKEN.match(text, pos)
        if m is None:
            raise CFSyntaxError('unexpected character', text, pos)
        tokens.append((m.group(), pos))
        pos = m.end()
    tokens.append(('', len(text)))

    idx = 0

    def expect(value: str) -> None:
        nonlocal idx
        tok, at = tokens[idx]
        if tok != value:
            raise CFSyntaxError(f'expected {value!r}', text, at)
        idx += 1

    def integer() -> int:
        nonlocal idx
        tok, at = tokens[idx]
        if not tok or tok in '[];,()':
            raise CFSyntaxError('expected an integer', text, at)
        idx += 1
        return int(tok)

    def block() -> List[int]:
        nonlocal idx
        expect('(')
        values = [integer()]
        while tokens[idx][0] == ',':
            idx += 1
            values.append(integer())
        expect(')')
        return values

    pre: List[int] = []
    period: List[int] = []
    expect('[')
    if tokens[idx][0] == '(':
        period = block()
    else:
        pre.append(integer())
        if tokens[idx][0] == ';':
            idx += 1
            while True:
                if tokens[idx][0] == '(':
                    period = block()
                    break
                pre.append(integer())
                if tokens[idx][0] != ',':
                    break
                idx += 1
    expect(']')
    expect('')
    try:
        return CFExpansion(pre, period)
    except ValueError as e:
        raise CFSyntaxError(str(e), text, 0) from e
