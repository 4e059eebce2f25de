# -*- coding: utf-8 -*-
"""
Level-k fusion rules, q-6j symbols and elementary duality (F-move) matrices of SU(2)_k.
All spins are handled as twice-spin integers.
"""
from collections import namedtuple
import functools
import logging

import numpy as np

from platjones.algebra.qarith import Spin, as_level, casimir, qfactorial, qint, qpower
from platjones.errors import EmptyBlock, InadmissibleTriple, OutOfRange

logger = logging.getLogger(__name__)

Triple = namedtuple('Triple', ['a', 'b', 'c'])
SixJ = namedtuple('SixJ', ['j1', 'j2', 'j12', 'j3', 'j23', 'j'])


def admissible(level, a, b, c):
    """ True iff |a-b| <= c <= a+b, a+b+c is an integer and a+b+c <= k """
    level = as_level(level)
    a, b, c = int(a), int(b), int(c)
    if a < 0 or b < 0 or c < 0:
        return False
    if c < abs(a - b) or c > a + b:
        return False
    if (a + b + c) % 2 != 0:
        return False
    return a + b + c <= 2 * level.k


def check_admissible(level, a, b, c):
    """ Raises InadmissibleTriple unless (a, b, c) fuses at the given level """
    if not admissible(level, a, b, c):
        raise InadmissibleTriple('Triple (%s, %s, %s) is not admissible at level %d'
                                 %(Spin(a), Spin(b), Spin(c), as_level(level).k))


def fusion_channels(level, a, b):
    """ Admissible c in a x b, ascending """
    level = as_level(level)
    a, b = int(a), int(b)
    hi = min(a + b, 2 * level.k - a - b)
    return [Spin(c) for c in range(abs(a - b), hi + 1, 2)]


def _delta(level, a, b, c):
    num = qfactorial(level, (a + b - c) // 2) * qfactorial(level, (a - b + c) // 2) \
          * qfactorial(level, (-a + b + c) // 2)
    den = qfactorial(level, (a + b + c) // 2 + 1)
    return np.sqrt(num / den)


@functools.lru_cache(maxsize=None)
def _qsixj_cached(k, j1, j2, j12, j3, j23, j):
    level = as_level(k)
    if not (admissible(level, j1, j2, j12) and admissible(level, j12, j3, j)
            and admissible(level, j2, j3, j23) and admissible(level, j1, j23, j)):
        return 0.0

    # triangle sums and the three quadrilateral sums, in spin units
    faces = [(j1 + j2 + j12) // 2, (j12 + j3 + j) // 2,
             (j2 + j3 + j23) // 2, (j1 + j23 + j) // 2]
    quads = [(j1 + j2 + j3 + j) // 2, (j2 + j12 + j + j23) // 2,
             (j1 + j12 + j3 + j23) // 2]

    total = 0.0
    for z in range(max(faces), min(quads) + 1):
        den = 1.0
        for f in faces:
            den *= qfactorial(level, z - f)
        for s in quads:
            den *= qfactorial(level, s - z)
        total += (-1) ** z * qfactorial(level, z + 1) / den

    prefactor = _delta(level, j1, j2, j12) * _delta(level, j12, j3, j) \
                * _delta(level, j2, j3, j23) * _delta(level, j1, j23, j)
    return float(prefactor * total)


def qsixj(level, s):
    """ Quantum 6j symbol {j1 j2 j12; j3 j j23}_q by the Racah sum with truncated factorials.

    Parameters
    ----------
    level : :obj:`Level`
    s : :obj:`SixJ`
        the six edge labels as twice-spins

    Returns
    -------
    float
        the symbol, 0 when one of its four triples is inadmissible
    """
    level = as_level(level)
    labels = [int(x) for x in s]
    if max(labels) > level.k:
        raise OutOfRange('6j label exceeds k/2 at level %d' %(level.k))
    return _qsixj_cached(level.k, *labels)


class ElementaryDualityMatrix(object):
    """ Recoupling between the two pairings of four objects a, b, c with total d.

    Attributes
    ----------
    fixed : :obj:`tuple` of :obj:`Spin`
        boundary labels (a, b, c, d)
    rows : :obj:`list` of :obj:`Spin`
        admissible channels e of a x b, ascending
    cols : :obj:`list` of :obj:`Spin`
        admissible channels f of b x c, ascending
    entries : :obj:`numpy.ndarray`
        real orthogonal matrix, entry [e, f]
    """
    def __init__(self, fixed, rows, cols, entries):
        self.fixed = tuple(Spin(x) for x in fixed)
        self.rows = list(rows)
        self.cols = list(cols)
        self.entries = entries
        self._row_index = dict((int(e), i) for i, e in enumerate(self.rows))
        self._col_index = dict((int(f), i) for i, f in enumerate(self.cols))

    @property
    def shape(self):
        return self.entries.shape

    def entry(self, e, f):
        """ Coefficient for channels e (left pairing) and f (right pairing), 0 if either is absent """
        i = self._row_index.get(int(e))
        j = self._col_index.get(int(f))
        if i is None or j is None:
            return 0.0
        return self.entries[i, j]

    def __repr__(self):
        return 'ElementaryDualityMatrix(%s, shape=%s)' %(','.join(str(x) for x in self.fixed),
                                                         self.entries.shape)


@functools.lru_cache(maxsize=None)
def _fmove_cached(k, a, b, c, d):
    level = as_level(k)
    rows = [e for e in fusion_channels(level, a, b) if admissible(level, e, c, d)]
    cols = [f for f in fusion_channels(level, b, c) if admissible(level, a, f, d)]
    entries = np.zeros([len(rows), len(cols)])
    sign = (-1) ** ((a + b + c + d) // 2)
    for i, e in enumerate(rows):
        for j, f in enumerate(cols):
            entries[i, j] = sign * np.sqrt(qint(level, e + 1) * qint(level, f + 1)) \
                            * _qsixj_cached(k, a, b, int(e), c, int(f), d)
    return ElementaryDualityMatrix((a, b, c, d), rows, cols, entries)


def fmove(level, a, b, c, d):
    """ Unitarized F-matrix [F^{abc}_d]_{e,f}; may have empty rows or columns """
    level = as_level(level)
    labels = [int(a), int(b), int(c), int(d)]
    if max(labels) > level.k:
        raise OutOfRange('F-move label exceeds k/2 at level %d' %(level.k))
    return _fmove_cached(level.k, *labels)


def elementary_duality(level, a, b, c, d):
    """ Elementary duality matrix relating ((a b)_e c)_d and (a (b c)_f)_d.

    Raises
    ------
    EmptyBlock
        no admissible intermediate label on either side
    """
    mat = fmove(level, a, b, c, d)
    if len(mat.rows) == 0 or len(mat.cols) == 0:
        raise EmptyBlock('No admissible intermediate label for (%s, %s, %s, %s)'
                         %(Spin(a), Spin(b), Spin(c), Spin(d)))
    return mat


def rmove(level, a, b, t):
    """ Braiding eigenvalue R^{ab}_t = (-1)^{t-a-b} q^{(c_t - c_a - c_b)/2} """
    check_admissible(level, a, b, t)
    sign = (-1) ** ((int(t) - int(a) - int(b)) // 2 % 2)
    return sign * qpower(level, (casimir(t) - casimir(a) - casimir(b)) / 2)
