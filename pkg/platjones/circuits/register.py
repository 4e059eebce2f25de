# -*- coding: utf-8 -*-
"""
Qubit register of the braid circuit: one block of ceil(log2(k+1)) qubits per
strand color and per free internal label of the cap-pair tree.
"""
from collections import namedtuple
import logging
import os

import numpy as np

from platjones.algebra.qarith import as_level
from platjones.braids.fusion_tree import chain_node, duality_moves, leaf, pair_node
from platjones.braids.kaulrep import FusionPath
from platjones.constants import MAX_QUBITS_ENV, ROOT_MOVE
from platjones.errors import EncodingOverflow, SizeGuardError

logger = logging.getLogger(__name__)

BlockDescriptor = namedtuple('BlockDescriptor', ['name', 'node'])

DEFAULT_MAX_QUBITS = 24


class RegisterLayout(object):
    """ Block structure of the register for 2m strands at level k.

    Attributes
    ----------
    m : int
    level : :obj:`Level`
    block_width : int
        qubits per block
    blocks : :obj:`list` of :obj:`BlockDescriptor`
        colors j_1..j_2m followed by p_1..p_m and r_1..r_{m-3}; a single p_1 block when m = 1
    """
    def __init__(self, m, level):
        if m < 1:
            raise ValueError('Need at least one cap pair, got m=%d' %(m))
        self.m = m
        self.level = as_level(level)
        self.block_width = int(self.level.k).bit_length()
        self.blocks = []
        if m == 1:
            self.blocks.append(BlockDescriptor('p1', (0, 2)))
        else:
            for i in range(2 * m):
                self.blocks.append(BlockDescriptor('j%d' %(i + 1), leaf(i)))
            num_pairs = m if m >= 3 else 1
            for i in range(1, num_pairs + 1):
                self.blocks.append(BlockDescriptor('p%d' %(i), pair_node(i)))
            for i in range(1, m - 2):
                self.blocks.append(BlockDescriptor('r%d' %(i), chain_node(i)))

    @property
    def num_blocks(self):
        return len(self.blocks)

    @property
    def block_dim(self):
        return 2 ** self.block_width

    @property
    def num_qubits(self):
        return self.num_blocks * self.block_width

    @property
    def shape(self):
        return (self.block_dim,) * self.num_blocks

    @property
    def dim(self):
        return self.block_dim ** self.num_blocks

    def initial_blocks(self):
        """ Block index holding each node of the cap-pair tree """
        m = self.m
        if m == 1:
            return {(0, 2): 0}
        blocks = dict((leaf(i), i) for i in range(2 * m))
        if m == 2:
            blocks[pair_node(1)] = 4
            blocks[pair_node(2)] = 4
            return blocks
        for i in range(1, m + 1):
            blocks[pair_node(i)] = 2 * m + i - 1
        for i in range(1, m - 2):
            blocks[chain_node(i)] = 3 * m + i - 1
        blocks[chain_node(m - 2)] = blocks[pair_node(m)]
        return blocks

    def move_blocks(self):
        """ Register blocks (a, b, c, d, moved) touched by each duality move, plus the
        block map of the cross-pair tree they end in """
        blocks = self.initial_blocks()
        out = []
        for move in duality_moves(self.m):
            positions = tuple(blocks[n] for n in (move.a, move.b, move.c, move.d, move.removed))
            out.append((move, positions))
            slot = blocks.pop(move.removed)
            blocks[move.added] = slot
            if move.kind == ROOT_MOVE:
                blocks.pop((move.c[0], move.d[1]))
                blocks[(move.a[0], move.c[1])] = blocks[move.d]
        return out, blocks

    def to_dict(self):
        return {
            'm': self.m,
            'k': self.level.k,
            'block_width': self.block_width,
            'blocks': [b.name for b in self.blocks],
            'qubits': self.num_qubits,
            'qubits_with_ancilla': self.num_qubits + 1
        }

    def __repr__(self):
        return 'RegisterLayout(m=%d, k=%d, qubits=%d)' %(self.m, self.level.k, self.num_qubits)


def layout(m, level):
    """ Register layout with (4m-3) blocks of ceil(log2(k+1)) qubits """
    return RegisterLayout(m, level)


def max_qubits(default=DEFAULT_MAX_QUBITS):
    """ Size guard, overridable through the environment """
    value = os.environ.get(MAX_QUBITS_ENV)
    if value is None:
        return default
    return int(value)


def check_size(reg, ancillas=1, limit=None):
    """ Raises SizeGuardError when the simulation would exceed the qubit limit """
    if limit is None:
        limit = max_qubits()
    total = reg.num_qubits + ancillas
    if total > limit:
        raise SizeGuardError('Simulation needs %d qubits, limit is %d (set %s to override)'
                             %(total, limit, MAX_QUBITS_ENV))


def path_values(reg, path):
    """ Block values of a path in register order """
    if reg.m == 1:
        return [int(path.p[0])]
    return [int(c) for c in path.colors] + [int(x) for x in path.free_labels]


def encode_path(reg, path):
    """ Computational basis index of a fusion path, first block most significant.

    Raises
    ------
    EncodingOverflow
        a label does not fit in a block
    """
    values = path_values(reg, path)
    for v in values:
        if v >= reg.block_dim:
            raise EncodingOverflow('Label 2j=%d does not fit in %d qubits' %(v, reg.block_width))
    return int(np.ravel_multi_index(values, reg.shape))


def decode_index(reg, index, colors=None):
    """ Fusion path stored at a basis index; m = 1 needs the classical colors """
    values = [int(v) for v in np.unravel_index(int(index), reg.shape)]
    m = reg.m
    if m == 1:
        if colors is None:
            colors = (0, 0)
        return FusionPath(colors, values[:1])
    colors = values[:2 * m]
    labels = values[2 * m:]
    if m == 2:
        return FusionPath(colors, [labels[0], labels[0]])
    return FusionPath(colors, labels[:m], labels[m:])
