# -*- coding: utf-8 -*-
"""
Statevector simulation of the braid circuit: phase gates for the half twists,
q-6j gates for the elementary duality moves, applied block-wise to the register.
"""
import functools
import logging

import numpy as np
import scipy.sparse as ss

from platjones.algebra.qarith import as_level
from platjones.algebra.recoupling import admissible, fmove
from platjones.braids.kaulrep import half_twist_eigenvalue
from platjones.constants import CONTROLLED_GATE, DISSOC_MOVE, PHASE_GATE, Q6J_GATE, RELABEL_GATE
from platjones.errors import PlatError, TruncationError

logger = logging.getLogger(__name__)


class GateOp(object):
    """ Unitary acting on a few register blocks.

    Attributes
    ----------
    kind : :obj:`str`
        phase, q6j, relabel or controlled
    blocks : :obj:`tuple` of int
        register blocks, in the index order of the unitary
    unitary : :obj:`scipy.sparse.csr_matrix`
        operator on the targeted blocks
    label : :obj:`str`
        human readable description
    base : :obj:`GateOp`
        the controlled gate, for kind controlled
    """
    def __init__(self, kind, blocks, unitary, label='', base=None):
        self.kind = kind
        self.blocks = tuple(blocks)
        self.unitary = unitary
        self.label = label
        self.base = base

    def controlled(self):
        """ The gate conditioned on the ancilla """
        return GateOp(CONTROLLED_GATE, self.blocks, self.unitary, 'c-' + self.label, base=self)

    def __repr__(self):
        return 'GateOp(%s, blocks=%s)' %(self.label or self.kind, self.blocks)


def _codes(width, count):
    return np.arange((2 ** width) ** count).reshape((2 ** width,) * count)


@functools.lru_cache(maxsize=None)
def q6j_unitary(k, width, forward):
    """ F-move on blocks (a, b, c, d, x); forward sends x = e to f, otherwise f to e.

    Codes outside the physical sector are left fixed, except that the surplus of
    one side is paired with the surplus of the other in ascending order.
    """
    level = as_level(k)
    dim = 2 ** width
    codes = _codes(width, 5)
    rows, cols, vals = [], [], []
    handled = np.zeros(dim ** 5, dtype=bool)
    for a in range(k + 1):
        for b in range(k + 1):
            for c in range(k + 1):
                for d in range(k + 1):
                    mat = fmove(level, a, b, c, d)
                    if len(mat.rows) == 0 or len(mat.cols) == 0:
                        continue
                    src = [int(e) for e in mat.rows]
                    dst = [int(f) for f in mat.cols]
                    for i, e in enumerate(src):
                        for j, f in enumerate(dst):
                            rows.append(codes[a, b, c, d, f])
                            cols.append(codes[a, b, c, d, e])
                            vals.append(mat.entries[i, j])
                    # surplus codes of the target side go back to the source surplus
                    spare_in = sorted(set(dst) - set(src))
                    spare_out = sorted(set(src) - set(dst))
                    for f, e in zip(spare_in, spare_out):
                        rows.append(codes[a, b, c, d, e])
                        cols.append(codes[a, b, c, d, f])
                        vals.append(1.0)
                    for x in set(src) | set(dst):
                        handled[codes[a, b, c, d, x]] = True
    rest = np.where(~handled)[0]
    rows.extend(rest.tolist())
    cols.extend(rest.tolist())
    vals.extend([1.0] * len(rest))
    u = ss.csr_matrix((vals, (rows, cols)), shape=(dim ** 5, dim ** 5), dtype=np.complex128)
    return u if forward else u.T.tocsr()


@functools.lru_cache(maxsize=None)
def phase_unitary(k, width, parallel, inverse):
    """ Half twist on blocks (j, j', t): |a, b, t> -> lambda_t(a, b) |b, a, t> """
    level = as_level(k)
    dim = 2 ** width
    codes = _codes(width, 3)
    u = ss.lil_matrix((dim ** 3, dim ** 3), dtype=np.complex128)
    for a in range(dim):
        for b in range(dim):
            for t in range(dim):
                if max(a, b, t) <= k and admissible(level, a, b, t):
                    u[codes[b, a, t], codes[a, b, t]] = half_twist_eigenvalue(
                        level, a, b, t, parallel, inverse)
                else:
                    u[codes[a, b, t], codes[a, b, t]] = 1.0
    return u.tocsr()


@functools.lru_cache(maxsize=None)
def single_pair_unitary(k, width, color, parallel, inverse):
    """ Half twist of the only cap pair on one block |t> with classical colors """
    level = as_level(k)
    dim = 2 ** width
    diag = np.ones(dim, dtype=np.complex128)
    for t in range(min(dim, k + 1)):
        if admissible(level, color, color, t):
            diag[t] = half_twist_eigenvalue(level, color, color, t, parallel, inverse)
    return ss.diags(diag).tocsr()


@functools.lru_cache(maxsize=None)
def relabel_unitary(width, source, target):
    """ Transposition of the codes |source> and |target> of one block """
    dim = 2 ** width
    perm = np.arange(dim)
    perm[source], perm[target] = target, source
    return ss.csr_matrix((np.ones(dim), (perm, np.arange(dim))), shape=(dim, dim),
                         dtype=np.complex128)


def closure_gates(reg, b):
    """ Relabels the color blocks from the top colors of b back to its bottom colors.

    The encoded top zero path then coincides with the bottom one, so the Hadamard
    overlap reads off the cap-to-cap matrix element.
    """
    if reg.m == 1:
        return []
    gates = []
    for i, (top, bottom) in enumerate(zip(b.top.colors, b.bottom.colors)):
        if int(top) != int(bottom):
            u = relabel_unitary(reg.block_width, int(top), int(bottom))
            gates.append(GateOp(RELABEL_GATE, (i,), u, 'R%d' %(i)))
    return gates


def _phase_gate(reg, position, parallel, inverse, colors, letter):
    k, width = reg.level.k, reg.block_width
    if reg.m == 1:
        u = single_pair_unitary(k, width, int(colors[0]), parallel, inverse)
        return GateOp(PHASE_GATE, (0,), u, 'B%d' %(letter))
    if position % 2 == 0:
        blocks = reg.initial_blocks()
    else:
        _, blocks = reg.move_blocks()
    channel = blocks[(position, position + 2)]
    u = phase_unitary(k, width, parallel, inverse)
    return GateOp(PHASE_GATE, (position, position + 1, channel), u, 'B%d' %(letter))


def _q6j_gate(reg, move, positions, forward):
    u = q6j_unitary(reg.level.k, reg.block_width, forward)
    label = 'F[%s]%s' %(move.kind, '' if forward else '^-1')
    return GateOp(Q6J_GATE, positions, u, label)


def compile_braid(reg, b):
    """ Gate list realizing the braid word on the encoded register.

    An odd letter is one phase gate on (j_i, j_{i+1}, p); an even letter is the
    3m-5 forward q-6j gates, a phase gate on the cross pair, and the inverse
    q-6j gates in reverse order.

    Parameters
    ----------
    reg : :obj:`RegisterLayout`
    b : :obj:`ColoredBraidWord`

    Returns
    -------
    :obj:`list` of :obj:`GateOp`
    """
    if b.m != reg.m:
        raise ValueError('Braid on %d strands does not fit a register for m=%d' %(b.index, reg.m))
    for c in b.colors:
        if int(c) > reg.level.k:
            raise TruncationError('Color %s exceeds k/2 at level %d' %(c, reg.level.k))
    if not b.bottom.plat_admissible() or not b.top.plat_admissible():
        raise PlatError('Braid %r is not plat-admissible' %(b))

    gates = compile_word(reg, b.word, b.bottom)
    logger.info('Compiled %d letters into %d gates on %d qubits', len(b), len(gates), reg.num_qubits)
    return gates


def compile_word(reg, word, bottom):
    """ Gate list of a word starting from the strand states `bottom`, without closure checks """
    moves, _ = reg.move_blocks()
    gates = []
    current = bottom
    for letter in word:
        position = abs(letter) - 1
        parallel = current.parallel(position)
        twist = _phase_gate(reg, position, parallel, letter < 0, current.colors, letter)
        current = current.swap(position)
        if abs(letter) % 2 == 1:
            gates.append(twist)
            continue
        # dissociating moves hold the right-node label in the moved block: transposed F
        forward = [_q6j_gate(reg, move, positions, move.kind != DISSOC_MOVE)
                   for move, positions in moves]
        backward = [_q6j_gate(reg, move, positions, move.kind == DISSOC_MOVE)
                    for move, positions in reversed(moves)]
        gates.extend(forward)
        gates.append(twist)
        gates.extend(backward)
    return gates


def gate_counts(gates, b=None):
    """ Totals per gate kind and, given the braid, a per-letter breakdown """
    counts = {Q6J_GATE: 0, PHASE_GATE: 0, RELABEL_GATE: 0}
    for gate in gates:
        kind = gate.base.kind if gate.kind == CONTROLLED_GATE else gate.kind
        counts[kind] += 1
    report = {'total': len(gates), 'q6j': counts[Q6J_GATE], 'phase': counts[PHASE_GATE],
              'relabel': counts[RELABEL_GATE]}
    if b is not None:
        breakdown = []
        per_even = 0 if b.m < 2 else 2 * (3 * b.m - 5)
        for letter in b.word:
            even = abs(letter) % 2 == 0
            breakdown.append({'letter': letter, 'kind': 'even' if even else 'odd',
                              'q6j': per_even if even else 0, 'phase': 1})
        report['per_letter'] = breakdown
    return report


def apply_gate(state, gate):
    """ Applies a gate to a state tensor of shape (2^w,)*blocks.

    A controlled gate expects a leading ancilla axis and acts on its |1> half.
    """
    if gate.kind == CONTROLLED_GATE:
        out = state.copy()
        out[1] = apply_gate(state[1], gate.base)
        return out
    num = len(gate.blocks)
    axes = list(range(state.ndim - num, state.ndim))
    moved = np.moveaxis(state, list(gate.blocks), axes)
    shape = moved.shape
    flat = moved.reshape(-1, gate.unitary.shape[0])
    flat = gate.unitary.dot(flat.T).T
    return np.moveaxis(np.asarray(flat).reshape(shape), axes, list(gate.blocks))


def basis_state(reg, index):
    """ Computational basis state of the register as a tensor """
    state = np.zeros(reg.dim, dtype=np.complex128)
    state[int(index)] = 1.0
    return state.reshape(reg.shape)


def run_circuit(reg, gates, state):
    """ Applies the gates in order; `state` is a flat vector or a register tensor """
    tensor = np.asarray(state, dtype=np.complex128).reshape(reg.shape)
    for gate in gates:
        tensor = apply_gate(tensor, gate)
    return tensor.reshape(-1)
