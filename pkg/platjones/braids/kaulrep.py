# -*- coding: utf-8 -*-
"""
Conformal-block bases of plat-closed colored braids and the unitary images
of the colored braid generators.
Odd generators are diagonal in the basis of cap pairs; even generators are
conjugated to diagonal form by the duality matrix built from elementary moves.
"""
from collections import namedtuple
import functools
import logging

import numpy as np

from platjones.algebra.qarith import Spin, as_level, casimir, qpower
from platjones.algebra.recoupling import check_admissible
from platjones.braids.braid import slice_at
from platjones.braids.fusion_tree import (chain_node, cross_pair_node, duality_moves, even_tree,
                                          move_matrix, odd_tree, pair_node)
from platjones.errors import BasisMismatch, GeneratorIndexError, TruncationError

logger = logging.getLogger(__name__)


class FusionPath(object):
    """ Labels of one conformal block of the cap-pair tree.

    Attributes
    ----------
    colors : :obj:`tuple` of :obj:`Spin`
        the 2m strand colors
    p : :obj:`tuple` of :obj:`Spin`
        pair couplings p_1..p_m
    r : :obj:`tuple` of :obj:`Spin`
        chain labels r_1..r_{m-3}; r_{m-2} always equals p_m
    """
    def __init__(self, colors, p, r=()):
        self.colors = tuple(Spin(c) for c in colors)
        self.p = tuple(Spin(x) for x in p)
        self.r = tuple(Spin(x) for x in r)

    @property
    def m(self):
        return len(self.colors) // 2

    @property
    def free_labels(self):
        """ The 2m-3 independent internal labels (p_1 alone when m <= 2) """
        if self.m <= 2:
            return self.p[:1]
        return self.p + self.r

    @staticmethod
    def from_labels(colors, labels):
        """ Path from a labeling of the cap-pair tree """
        m = len(colors) // 2
        if m == 1:
            return FusionPath(colors, (0,))
        p = [labels[pair_node(i)] for i in range(1, m + 1)]
        r = [labels[chain_node(i)] for i in range(1, m - 2)]
        return FusionPath(colors, p, r)

    def to_labels(self):
        """ Labeling of the cap-pair tree """
        m = self.m
        if m == 1:
            return {}
        labels = dict((pair_node(i), int(self.p[i - 1])) for i in range(1, m + 1))
        for i in range(1, m - 2):
            labels[chain_node(i)] = int(self.r[i - 1])
        if m >= 3:
            labels[chain_node(m - 2)] = int(self.p[-1])
        return labels

    def is_zero(self):
        return all(int(x) == 0 for x in self.p + self.r)

    def __eq__(self, other):
        return isinstance(other, FusionPath) and other.colors == self.colors \
            and other.p == self.p and other.r == self.r

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.colors, self.p, self.r))

    def __repr__(self):
        return 'FusionPath(p=%s, r=%s)' %(','.join(str(x) for x in self.p),
                                          ','.join(str(x) for x in self.r))


class Basis(object):
    """ Ordered admissible fusion paths for one slice of a braid """
    def __init__(self, level, slice, paths, states):
        self.level = level
        self.slice = slice
        self.paths = list(paths)
        self._states = states
        self._index = dict((path, i) for i, path in enumerate(self.paths))

    @property
    def m(self):
        return len(self.slice) // 2

    @property
    def dim(self):
        return len(self.paths)

    def __len__(self):
        return len(self.paths)

    def index(self, path):
        return self._index.get(path)

    def zero_index(self):
        """ Position of the all-zero path, None when the colors admit none """
        for i, path in enumerate(self.paths):
            if path.is_zero():
                return i
        return None

    def __repr__(self):
        return 'Basis(k=%d, %r, dim=%d)' %(self.level.k, self.slice, self.dim)


class RepMatrix(object):
    """ Unitary between the bases of two slices """
    def __init__(self, source, target, entries):
        self.source = source
        self.target = target
        self.entries = entries

    def __repr__(self):
        return 'RepMatrix(%r -> %r)' %(self.source.slice, self.target.slice)


DualityStep = namedtuple('DualityStep', ['move', 'matrix', 'positions'])


def _check_colors(level, slice):
    for c in slice.colors:
        if int(c) > level.k:
            raise TruncationError('Color %s exceeds k/2 at level %d' %(c, level.k))


@functools.lru_cache(maxsize=None)
def _enumerate(level, slice):
    colors = slice.colors
    m = len(colors) // 2
    states = odd_tree(m).labelings(level, colors)
    paths = [FusionPath.from_labels(colors, lab) for lab in states]
    return Basis(level, slice, paths, states)


def enumerate_basis(level, slice):
    """ All admissible fusion paths of the cap-pair tree for the slice colors, sorted by (p, r) """
    level = as_level(level)
    _check_colors(level, slice)
    basis = _enumerate(level, slice)
    logger.debug('Basis %r', basis)
    return basis


def half_twist_eigenvalue(level, j, jp, t, parallel, inverse=False):
    """ Eigenvalue of a right-handed half twist of strands j, jp fused to channel t.

    Parallel strands pick up (-1)^{j+j'-t} q^{(c_j+c_j')/2 + c_min - c_t/2},
    antiparallel strands (-1)^{t-|j-j'|} q^{|c_j-c_j'|/2 - c_t/2}.
    """
    level = as_level(level)
    check_admissible(level, j, jp, t)
    j, jp, t = int(j), int(jp), int(t)
    cj, cjp, ct = casimir(j), casimir(jp), casimir(t)
    if parallel:
        sign = (-1) ** (((j + jp - t) // 2) % 2)
        value = sign * qpower(level, (cj + cjp) / 2 + casimir(min(j, jp)) - ct / 2)
    else:
        sign = (-1) ** (((t - abs(j - jp)) // 2) % 2)
        value = sign * qpower(level, abs(cj - cjp) / 2 - ct / 2)
    return np.conj(value) if inverse else value


def _check_generator(basis, generator, parity):
    index = len(basis.slice)
    if generator < 1 or generator > index - 1:
        raise GeneratorIndexError('Generator %d outside [1, %d]' %(generator, index - 1),
                                  token=str(generator))
    if generator % 2 != parity:
        raise GeneratorIndexError('Generator %d has the wrong parity' %(generator),
                                  token=str(generator))


def _relabel(src_states, dst_states, key):
    index = dict((key(lab), i) for i, lab in enumerate(dst_states))
    return [index[key(lab)] for lab in src_states]


def odd_generator(level, basis, generator, inverse=False):
    """ Diagonal action of B_{2l-1}, with eigenvalue read off the pair label p_l.

    Parameters
    ----------
    level : :obj:`Level`
    basis : :obj:`Basis`
        source basis
    generator : int
        odd generator index 2l-1
    inverse : bool
    """
    level = as_level(level)
    _check_generator(basis, generator, 1)
    i = generator - 1
    l = (generator + 1) // 2
    slice = basis.slice
    target = enumerate_basis(level, slice.swap(i))
    parallel = slice.parallel(i)
    j, jp = slice.colors[i], slice.colors[i + 1]

    entries = np.zeros([target.dim, basis.dim], dtype=np.complex128)
    targets = _relabel(basis._states, target._states, odd_tree(basis.m).key)
    for col, path in enumerate(basis.paths):
        t = path.p[l - 1] if basis.m > 1 else 0
        entries[targets[col], col] = half_twist_eigenvalue(level, j, jp, t, parallel, inverse)
    return RepMatrix(basis, target, entries)


@functools.lru_cache(maxsize=None)
def _duality(level, colors):
    m = len(colors) // 2
    states = odd_tree(m).labelings(level, colors)
    steps = []
    mat = np.eye(len(states))
    for move in duality_moves(m):
        dst = move.target.labelings(level, colors)
        step = move_matrix(level, move, colors, states, dst)
        positions = (move.a, move.b, move.c, move.d, move.removed)
        steps.append(DualityStep(move, step, positions))
        mat = step.dot(mat)
        states = dst
    return steps, mat, states


def duality_decomposition(level, basis):
    """ The 3m-5 elementary moves from the cap-pair tree to the cross-pair tree.

    Returns
    -------
    :obj:`list` of :obj:`DualityStep`
        each with the tree move, its dense matrix on the labelings and the
        (a, b, c, d, moved) nodes it touches
    """
    level = as_level(level)
    steps, _, _ = _duality(level, basis.slice.colors)
    return list(steps)


def duality_matrix(level, basis, inverse=False):
    """ Dense duality matrix A (cross-pair labelings x basis), or its inverse A^T """
    level = as_level(level)
    _, mat, _ = _duality(level, basis.slice.colors)
    return mat.T if inverse else mat


def even_generator(level, basis, generator, inverse=False):
    """ B_{2l} = A(c')^T diag(lambda_{q_l}) A(c), mapping colors c to the swapped c' """
    level = as_level(level)
    _check_generator(basis, generator, 0)
    i = generator - 1
    l = generator // 2
    slice = basis.slice
    target = enumerate_basis(level, slice.swap(i))
    parallel = slice.parallel(i)
    j, jp = slice.colors[i], slice.colors[i + 1]

    _, a_src, even_src = _duality(level, slice.colors)
    _, a_dst, even_dst = _duality(level, target.slice.colors)
    tree = even_tree(basis.m)
    node = cross_pair_node(l)
    targets = _relabel(even_src, even_dst, tree.key)
    twist = np.zeros([len(even_dst), len(even_src)], dtype=np.complex128)
    for col, lab in enumerate(even_src):
        twist[targets[col], col] = half_twist_eigenvalue(level, j, jp, lab[node], parallel, inverse)
    entries = a_dst.T.dot(twist).dot(a_src)
    return RepMatrix(basis, target, entries)


def generator_matrix(level, basis, letter):
    """ RepMatrix of a signed braid letter acting on `basis` """
    generator = abs(letter)
    if generator % 2 == 1:
        return odd_generator(level, basis, generator, letter < 0)
    return even_generator(level, basis, generator, letter < 0)


def compose(second, first):
    """ second o first; the slices must chain """
    if first.target.slice != second.source.slice:
        raise BasisMismatch('Cannot compose %r after %r' %(second, first))
    return RepMatrix(first.source, second.target, second.entries.dot(first.entries))


def word_matrix(level, b):
    """ Dense product of the generator matrices of a whole word """
    level = as_level(level)
    basis = enumerate_basis(level, b.bottom)
    rep = RepMatrix(basis, basis, np.eye(basis.dim, dtype=np.complex128))
    for n, letter in enumerate(b.word):
        current = enumerate_basis(level, slice_at(b, n))
        rep = compose(generator_matrix(level, current, letter), rep)
    return rep
