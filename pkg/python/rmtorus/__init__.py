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

from .surd import Mat2Z, QElem, QuadSurd, RootSelector, Sign, compose, format_qelem, format_rational, format_surd, \
    parse_surd_literal, qelem_arith, qelem_sign, surd_conjugate, surd_floor, surd_from_quadratic, surd_mobius, surd_new
from .cfrac import CFExpansion, Convergent, cf_convergents, cf_format, cf_matrix, cf_of_rational, cf_of_surd, cf_parse, \
    cf_tail_equivalent, cf_to_surd, is_reduced, pell_solution
from .nctorus import K0Class, NcTorus, PseudoLattice, arithmetic_complexity, k0_positive, module_equal, normalized_period, \
    real_multiplication, stably_isomorphic, torus_new
from .functor import Case1, Case4, CmOrder, EmptySolution, FoliationParams, OrderForm, RankDegenerate, RationalRejected, \
    RealMultiplication, TrivialInteger, cm_generator_matrix, foliation_params, isogeny_transport, lemma2_classify, \
    real_multiplication_theta
from . import errors, harness

__all__ = [
    'Mat2Z', 'QElem', 'QuadSurd', 'RootSelector', 'Sign', 'compose', 'format_qelem', 'format_rational', 'format_surd',
    'parse_surd_literal', 'qelem_arith', 'qelem_sign', 'surd_conjugate', 'surd_floor', 'surd_from_quadratic',
    'surd_mobius', 'surd_new',
    'CFExpansion', 'Convergent', 'cf_convergents', 'cf_format', 'cf_matrix', 'cf_of_rational', 'cf_of_surd', 'cf_parse',
    'cf_tail_equivalent', 'cf_to_surd', 'is_reduced', 'pell_solution',
    'K0Class', 'NcTorus', 'PseudoLattice', 'arithmetic_complexity', 'k0_positive', 'module_equal', 'normalized_period',
    'real_multiplication', 'stably_isomorphic', 'torus_new',
    'Case1', 'Case4', 'CmOrder', 'EmptySolution', 'FoliationParams', 'OrderForm', 'RankDegenerate', 'RationalRejected',
    'RealMultiplication', 'TrivialInteger', 'cm_generator_matrix', 'foliation_params', 'isogeny_transport',
    'lemma2_classify', 'real_multiplication_theta',
    'errors', 'harness',
]

__version__ = '0.1.0'
