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

""" Command line interface.

Exit codes: 0 on success, 1 on usage errors (including malformed surd literals),
2 on data errors. All numbers are printed exactly.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from . import __version__
from .cfrac import cf_format, cf_of_rational, cf_of_surd, pell_solution
from .errors import RmTorusError, SurdSyntaxError
from .functor import CmOrder, OrderForm, isogeny_transport, lemma2_classify, real_multiplication_theta
from .harness import JConstant, ReportFormat, conjecture_report, format_report, j_invariant_lambda, load_dataset
from .nctorus import K0Class, NcTorus, arithmetic_complexity, k0_positive, normalized_period, real_multiplication, \
    stably_isomorphic, torus_new
from .surd import SURD_GRAMMAR, Mat2Z, QuadSurd, format_qelem, format_rational, format_surd, parse_surd_literal

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f'{self.prog}: {message}')


def _literal(text: str) -> Union[QuadSurd, Fraction]:
    try:
        return parse_surd_literal(text)
    except SurdSyntaxError as e:
        raise UsageError(f'{e}\n{SURD_GRAMMAR}') from e


def _torus(text: str) -> NcTorus:
    return torus_new(_literal(text))


def _bool(value: bool) -> str:
    return 'true' if value else 'false'


def cmd_cf(args: argparse.Namespace) -> str:
    value = _literal(args.surd)
    cf = cf_of_surd(value) if isinstance(value, QuadSurd) else cf_of_rational(value)
    return cf_format(cf)


def cmd_complexity(args: argparse.Namespace) -> str:
    return str(arithmetic_complexity(_torus(args.surd)))


def cmd_equiv(args: argparse.Namespace) -> str:
    return _bool(stably_isomorphic(_torus(args.first), _torus(args.second)))


def cmd_k0(args: argparse.Namespace) -> str:
    return _bool(k0_positive(_torus(args.surd), K0Class(args.p, args.q)))


def cmd_mobius(args: argparse.Namespace) -> str:
    theta = _torus(args.surd).theta
    return format_surd(isogeny_transport(theta, Mat2Z(args.a, args.b, args.c, args.d)))


def cmd_lemma2(args: argparse.Namespace) -> str:
    return lemma2_classify(Mat2Z(args.a, args.b, args.c, args.d)).describe()


def cmd_cm_theta(args: argparse.Namespace) -> str:
    rm = real_multiplication_theta(CmOrder(args.d, OrderForm.HALF if args.half else OrderForm.SQRT))
    return f'theta={format_surd(rm.theta)} k={format_qelem(rm.k)} generator={rm.generator}'


def cmd_jlambda(args: argparse.Namespace) -> str:
    lam = _literal(args.lam)
    if not isinstance(lam, Fraction):
        raise UsageError(f'jlambda: expected a rational, got {args.lam!r}')
    constant = JConstant.REDUCED if args.paper_constant else JConstant.STANDARD
    return format_rational(j_invariant_lambda(lam, constant))


def cmd_report(args: argparse.Namespace) -> str:
    rows = conjecture_report(load_dataset(args.dataset), jobs=args.jobs)
    if args.plot is not None:
        from matplotlib import pyplot as plt

        from .plot import plot_conjecture_report

        ax = plot_conjecture_report(rows)
        ax.figure.savefig(args.plot)
        plt.close(ax.figure)
    return format_report(rows, ReportFormat(args.format)).rstrip('\n')


def cmd_normalized_period(args: argparse.Namespace) -> str:
    period = normalized_period(_torus(args.surd), canonicalize=not args.no_canonicalize)
    return '(' + ', '.join(format_rational(r) for r in period) + ')'


def cmd_pell(args: argparse.Namespace) -> str:
    x, y, norm = pell_solution(args.D)
    return f'{x} {y} {norm}'


def cmd_multiplier(args: argparse.Namespace) -> str:
    M, k = real_multiplication(_torus(args.surd))
    return f'matrix={M} k={format_qelem(k)}'


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='rmtorus', description='Exact invariants of noncommutative tori with real multiplication.',
                             epilog=f'surd literals:\n{SURD_GRAMMAR}',
                             formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for info, -vv for debug logging')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', metavar='command', parser_class=_ArgumentParser)
    sub.required = True

    def add(name: str, func: Callable[[argparse.Namespace], str], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    p = add('cf', cmd_cf, 'continued fraction expansion')
    p.add_argument('surd')

    p = add('complexity', cmd_complexity, 'arithmetic complexity (minimal period length)')
    p.add_argument('surd')

    p = add('equiv', cmd_equiv, 'stable isomorphism of two tori')
    p.add_argument('first')
    p.add_argument('second')

    p = add('k0', cmd_k0, 'membership of (p, q) in the positive cone of K_0')
    p.add_argument('surd')
    p.add_argument('p', type=int)
    p.add_argument('q', type=int)

    p = add('mobius', cmd_mobius, 'apply (c + d theta)/(a + b theta)')
    p.add_argument('surd')
    for name in 'abcd':
        p.add_argument(name, type=int)

    p = add('lemma2', cmd_lemma2, 'classify an integer matrix')
    for name in 'abcd':
        p.add_argument(name, type=int)

    p = add('cm-theta', cmd_cm_theta, 'theta of a CM order')
    p.add_argument('d', type=int)
    p.add_argument('--half', action='store_true', help='use omega = (1+sqrt(-d))/2')

    p = add('jlambda', cmd_jlambda, 'j-invariant of a Legendre curve')
    p.add_argument('lam', metavar='rational')
    p.add_argument('--paper-constant', action='store_true', help='use the constant 2^6 instead of 2^8')

    p = add('report', cmd_report, 'conjecture report for a curve dataset')
    p.add_argument('dataset')
    p.add_argument('--format', choices=[f.value for f in ReportFormat], default=ReportFormat.TSV.value)
    p.add_argument('--jobs', type=int, default=1, help='number of worker threads')
    p.add_argument('--plot', default=None, metavar='PATH', help='also write a scatter plot')

    p = add('normalized-period', cmd_normalized_period, 'period divided by its first entry')
    p.add_argument('surd')
    p.add_argument('--no-canonicalize', action='store_true', help='keep the rotation of the expansion')

    p = add('pell', cmd_pell, 'fundamental solution of x^2 - D y^2 = +-1')
    p.add_argument('D', type=int)

    p = add('multiplier', cmd_multiplier, 'unimodular matrix fixing theta and its multiplier')
    p.add_argument('surd')

    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as e:
        print(e, file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return int(e.code or 0)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)

    try:
        output = args.func(args)
    except UsageError as e:
        print(f'usage error: {e}', file=sys.stderr)
        return EXIT_USAGE
    except (RmTorusError, OSError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_DATA
    print(output)
    return EXIT_OK


def main() -> None:
    sys.exit(cli_main())
