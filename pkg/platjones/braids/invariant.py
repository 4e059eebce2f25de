# -*- coding: utf-8 -*-
"""
Exact colored Jones invariant of a plat closure: the matrix element of the braid
between the all-zero cap states, scaled by the quantum dimensions of the cap pairs.
"""
from fractions import Fraction
import logging
import time

import numpy as np

from platjones.algebra.qarith import as_level, qdim_product, qpower
from platjones.braids.kaulrep import enumerate_basis, generator_matrix
from platjones.errors import PlatError, TruncationError

logger = logging.getLogger(__name__)


class InvariantValue(object):
    """ Result of an exact evaluation.

    Attributes
    ----------
    value : complex
        the invariant
    level : :obj:`Level`
    coloring : :obj:`tuple` of :obj:`Spin`
        bottom strand colors
    braid_length : int
    matrix_element : complex
        the bare matrix element between the cap states
    qdim_product : float
        product of [2j+1] over the cap pairs
    basis_dim : int
        dimension of the bottom basis
    """
    def __init__(self, value, level, coloring, braid_length, matrix_element=None,
                 qdim_product=None, basis_dim=None):
        self.value = complex(value)
        self.level = level
        self.coloring = tuple(coloring)
        self.braid_length = braid_length
        self.matrix_element = matrix_element
        self.qdim_product = qdim_product
        self.basis_dim = basis_dim

    def to_dict(self):
        return {
            'value': complex_to_dict(self.value),
            'k': self.level.k,
            'coloring': [str(c) for c in self.coloring],
            'braid_length': self.braid_length,
            'qdim_product': self.qdim_product,
            'basis_dim': self.basis_dim
        }

    def __repr__(self):
        return 'InvariantValue(%s, k=%d)' %(self.value, self.level.k)


def complex_to_dict(z):
    """ JSON form of a complex number """
    z = complex(z)
    return {'re': z.real, 'im': z.imag, 'abs': abs(z)}


def cap_colors(b):
    """ Color of each bottom cap pair """
    return [b.colors[2 * i] for i in range(b.m)]


def _check(level, b):
    for c in b.colors:
        if int(c) > level.k:
            raise TruncationError('Color %s exceeds k/2 at level %d' %(c, level.k))
    if not b.bottom.plat_admissible() or not b.top.plat_admissible():
        raise PlatError('Braid %r is not plat-admissible' %(b))


def evolve(level, b):
    """ Applies the word to the all-zero bottom state, letter by letter.

    Returns
    -------
    :obj:`numpy.ndarray`
        final state in the top basis
    :obj:`Basis`
        top basis
    """
    level = as_level(level)
    _check(level, b)
    basis = enumerate_basis(level, b.bottom)
    start = basis.zero_index()
    if start is None:
        raise PlatError('All-zero fusion path missing from the bottom basis')
    state = np.zeros(basis.dim, dtype=np.complex128)
    state[start] = 1.0
    for n, letter in enumerate(b.word):
        rep = generator_matrix(level, basis, letter)
        state = rep.entries.dot(state)
        basis = rep.target
    return state, basis


def evaluate_trace_of_word(level, b):
    """ Matrix element <0|W_b|0> between the top and bottom all-zero paths """
    state, top = evolve(level, b)
    end = top.zero_index()
    if end is None:
        raise PlatError('All-zero fusion path missing from the top basis')
    return complex(state[end])


def evaluate(level, b):
    """ Colored Jones invariant of the plat closure of b.

    Parameters
    ----------
    level : :obj:`Level` or int
    b : :obj:`ColoredBraidWord`

    Returns
    -------
    :obj:`InvariantValue`
    """
    level = as_level(level)
    tic = time.time()
    element = evaluate_trace_of_word(level, b)
    scale = qdim_product(level, cap_colors(b))
    dim = enumerate_basis(level, b.bottom).dim
    logger.info('Evaluated braid of length %d at k=%d (basis dim %d) in %.3f sec',
                len(b), level.k, dim, time.time() - tic)
    return InvariantValue(scale * element, level, b.colors, len(b),
                          matrix_element=element, qdim_product=scale, basis_dim=dim)


def bracket_variable(level):
    """ Kauffman variable A = q^{-1/4}, so that the Jones variable t = A^{-4} equals q """
    return qpower(as_level(level), Fraction(-1, 4))


def loop_value(level):
    """ delta = -A^2 - A^{-2}; its modulus is [2] """
    a = bracket_variable(level)
    return -a ** 2 - a ** -2


def writhe_factor(level, writhe):
    """ (-A^3)^{-w}, which removes the framing dependence of the bracket """
    a = bracket_variable(level)
    return (-a ** 3) ** (-writhe)
