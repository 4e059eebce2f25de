# -*- coding: utf-8 -*-
"""
Brute-force Kauffman bracket of a spin-1/2 plat closure, used to cross-check the
representation engine. Exponential in the number of crossings.
"""
from collections import namedtuple
import itertools
import logging

import numpy as np
import scipy.sparse as ss
from scipy.sparse.csgraph import connected_components

from platjones.algebra.qarith import as_level
from platjones.braids.braid import parse, slice_at
from platjones.braids.invariant import bracket_variable, evaluate, loop_value, writhe_factor
from platjones.constants import ORACLE_TOL
from platjones.errors import ColorError, OracleSizeError

logger = logging.getLogger(__name__)

MAX_CROSSINGS = 16

# plat presentations of small links, all strands colored 1/2
LINK_TABLE = {
    'unknot': 'strands=2 colors=1/2,1/2 word=',
    'unlink2': 'strands=4 colors=1/2,1/2,1/2,1/2 word=',
    'hopf': 'strands=4 colors=1/2,1/2,1/2,1/2 word=2 2',
    'trefoil': 'strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2 orient=uddu',
    'figure_eight': 'strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 -1 -1',
    'cinquefoil': 'strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2 2 2 orient=uddu',
}

ComparisonRecord = namedtuple('ComparisonRecord',
                              ['kaul_abs', 'oracle_abs', 'difference', 'passed'])


def link_table():
    """ Parsed stock links by name """
    return dict((name, parse(text)) for name, text in LINK_TABLE.items())


class PlanarDiagram(object):
    """ Plat diagram of a braid: one signed crossing per letter plus the caps.

    Vertex (t, p) is strand position p just above letter t; there are len(word)+1 rows.
    """
    def __init__(self, b):
        self.index = b.index
        self.word = b.word
        self.crossings = []
        for n, letter in enumerate(b.word):
            parallel = slice_at(b, n).parallel(abs(letter) - 1)
            sign = 1 if parallel else -1
            self.crossings.append(sign if letter > 0 else -sign)
        self.loops = 0

    @property
    def writhe(self):
        return int(np.sum(self.crossings))

    def vertex(self, t, p):
        return t * self.index + p

    @property
    def num_vertices(self):
        return (len(self.word) + 1) * self.index

    def _fixed_edges(self):
        edges = []
        top = len(self.word)
        for p in range(0, self.index, 2):
            edges.append((self.vertex(0, p), self.vertex(0, p + 1)))
            edges.append((self.vertex(top, p), self.vertex(top, p + 1)))
        for t, letter in enumerate(self.word):
            i = abs(letter) - 1
            for p in range(self.index):
                if p != i and p != i + 1:
                    edges.append((self.vertex(t, p), self.vertex(t + 1, p)))
        return edges

    def count_loops(self, smoothing):
        """ Number of loops after smoothing each crossing; True means cup-cap """
        edges = self._fixed_edges()
        for t, letter in enumerate(self.word):
            i = abs(letter) - 1
            if smoothing[t]:
                edges.append((self.vertex(t, i), self.vertex(t, i + 1)))
                edges.append((self.vertex(t + 1, i), self.vertex(t + 1, i + 1)))
            else:
                edges.append((self.vertex(t, i), self.vertex(t + 1, i)))
                edges.append((self.vertex(t, i + 1), self.vertex(t + 1, i + 1)))
        edges = np.array(edges)
        n = self.num_vertices
        graph = ss.coo_matrix((np.ones(len(edges)), (edges[:, 0], edges[:, 1])), shape=(n, n))
        self.loops, _ = connected_components(graph, directed=False)
        return self.loops


def _check(b, max_crossings):
    for c in b.colors:
        if int(c) != 1:
            raise ColorError('Bracket oracle needs every color to be 1/2, got %s' %(c))
    if len(b.word) > max_crossings:
        raise OracleSizeError('%d crossings exceed the oracle limit of %d'
                              %(len(b.word), max_crossings))


def kauffman_bracket(level, b, max_crossings=MAX_CROSSINGS):
    """ Un-reduced bracket <L> summed over all 2^l smoothings, times (-A^3)^{-w}.

    A letter sigma_i expands to A id + A^{-1} E, its inverse to A^{-1} id + A E,
    and each loop contributes -A^2 - A^{-2}. The writhe factor makes the value an
    invariant of the link; the unknot gives -A^2 - A^{-2}.
    """
    level = as_level(level)
    _check(b, max_crossings)
    a = bracket_variable(level)
    delta = loop_value(level)
    diagram = PlanarDiagram(b)
    total = 0.0 + 0.0j
    for smoothing in itertools.product([False, True], repeat=len(b.word)):
        weight = 1.0 + 0.0j
        for letter, cupcap in zip(b.word, smoothing):
            power = -1 if cupcap else 1
            weight *= a ** (power if letter > 0 else -power)
        total += weight * delta ** diagram.count_loops(smoothing)
    logger.debug('Bracket over %d smoothings: %s', 2 ** len(b.word), total)
    return complex(writhe_factor(level, diagram.writhe) * total)


def jones_polynomial_value(level, b, max_crossings=MAX_CROSSINGS):
    """ Jones polynomial of the plat closure at t = q, normalized to 1 on the unknot """
    return complex(kauffman_bracket(level, b, max_crossings) / loop_value(level))


def compare(level, b, tol=ORACLE_TOL, max_crossings=MAX_CROSSINGS):
    """ Moduli of the representation value and the bracket, and whether they agree """
    kaul_abs = abs(evaluate(level, b).value)
    oracle_abs = abs(kauffman_bracket(level, b, max_crossings))
    difference = abs(kaul_abs - oracle_abs)
    return ComparisonRecord(kaul_abs, oracle_abs, difference, bool(difference <= tol))
