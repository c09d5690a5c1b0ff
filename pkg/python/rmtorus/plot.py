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

import itertools
import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import matplotlib.patches as mpatches
from matplotlib import pyplot as plt
import seaborn as sns

from .cfrac import cf_of_surd
from .harness.report import ConjectureRow
from .nctorus import K0Class, NcTorus, k0_positive
from .surd import QuadSurd, format_surd

logger = logging.getLogger(__name__)

CATEGORIES = ('agrees', 'disagrees', 'error')


def _category(row: ConjectureRow) -> str:
    if row.is_error():
        return 'error'
    return 'agrees' if row.agrees else 'disagrees'


def _approx(theta: QuadSurd) -> float:
    # drawing only; all decisions are made exactly
    return float((theta.P + np.sqrt(theta.D)) / theta.Q)


class AgreementLedger:

    def __init__(self, cmap='tab10', names: Optional[Dict[str, str]] = None, title=None, position='right'):
        self.cmap = cmap
        if names is None:
            self.names = dict()
        else:
            self.names = names
        self.title = title
        self.position = position
        self.color_palette = sns.color_palette(self.cmap, len(CATEGORIES))
        self.values = set(CATEGORIES)

    def fit(self, rows: Sequence[ConjectureRow]) -> 'AgreementLedger':
        self.values = {_category(row) for row in rows}
        return self

    def map_color(self, row: ConjectureRow) -> Tuple:
        return self.color_palette[CATEGORIES.index(_category(row))]

    def create_legend(self, ax):
        patches = []
        for category in CATEGORIES:
            if category not in self.values:
                continue
            patches.append(mpatches.Patch(
                color=self.color_palette[CATEGORIES.index(category)],
                label=self.names.get(category, category)
            ))
        if self.position == 'top':
            ax.legend(handles=patches, bbox_to_anchor=(0, 1), loc='lower left', title=self.title, ncols=len(patches), fontsize='small')
        else:
            ax.legend(handles=patches, loc='upper left', title=self.title)


def plot_conjecture_report(rows: Sequence[ConjectureRow], ledger: Optional[AgreementLedger] = None,
                           ax: plt.Axes = None):
    """ Plots the published rank against complexity - 1; error rows are skipped. """

    if ledger is None:
        ledger = AgreementLedger()
    ledger.fit(rows)

    if ax is None:
        fig, ax = plt.subplots(1, 1)

    points = [row for row in rows if not row.is_error()]
    for row in rows:
        if row.is_error():
            logger.warning('skipping error row %s: %s', row.label, row.error)

    if points:
        x = np.array([row.predicted_rank for row in points])
        y = np.array([row.known_rank for row in points])
        ax.scatter(x, y, c=[ledger.map_color(row) for row in points], zorder=2)
        top = int(max(x.max(), y.max())) + 1
        ax.plot([0, top], [0, top], color=(0.15, 0.15, 0.33), linewidth=0.5, zorder=1)

    ax.set_xlabel('complexity - 1')
    ax.set_ylabel('published rank')
    ledger.create_legend(ax)

    return ax


def plot_k0_cone(t: NcTorus, bound: int = 5, edge_color=None, ax: plt.Axes = None):
    """ Lattice points of K_0 = Z^2 in the box [-bound, bound]^2 coloured by membership in
    the positive cone, together with the boundary line p + theta q = 0. """

    if edge_color is None:
        edge_color = (0.15, 0.15, 0.33)

    if ax is None:
        fig, ax = plt.subplots(1, 1, subplot_kw={'aspect': 'equal'})
        ax.set_xlim(-bound - 0.5, bound + 0.5)
        ax.set_ylim(-bound - 0.5, bound + 0.5)

    palette = sns.color_palette('flare', 2)
    coords = list(itertools.product(range(-bound, bound + 1), repeat=2))
    positive = np.array([k0_positive(t, K0Class(p, q)) for p, q in coords])
    pts = np.array(coords)

    ax.scatter(pts[positive, 0], pts[positive, 1], color=palette[0], s=12, label='positive')
    ax.scatter(pts[~positive, 0], pts[~positive, 1], color=palette[1], s=12, label='negative')

    q = np.linspace(-bound, bound, 2)
    ax.plot(-_approx(t.theta) * q, q, color=edge_color, linewidth=0.5)
    ax.set_xlabel('p')
    ax.set_ylabel('q')
    ax.set_title(f'p + {format_surd(t.theta)} q >= 0')
    ax.legend(loc='upper right', fontsize='small')

    return ax


def plot_partial_quotients(t: NcTorus, n: int = 20, ax: plt.Axes = None):
    """ Bar chart of the first ``n`` partial quotients with the periodic part shaded. """

    cf = cf_of_surd(t.theta)
    terms = np.array(list(itertools.islice(cf.terms(), n)))

    if ax is None:
        fig, ax = plt.subplots(1, 1)

    ax.bar(np.arange(len(terms)), terms, color=sns.color_palette('tab10', 1)[0])
    ax.axvspan(len(cf.preperiod) - 0.5, len(terms) - 0.5, alpha=0.15, color=(0.15, 0.15, 0.33))
    ax.set_xlabel('index')
    ax.set_ylabel('partial quotient')

    return ax
