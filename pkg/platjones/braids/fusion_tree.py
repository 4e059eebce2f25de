# -*- coding: utf-8 -*-
"""
Planar rooted binary fusion trees over the 2m strand positions and their
elementary moves (associativity and root-edge rotations).
A node is the half-open range (lo, hi) of leaves below it; leaves are (i, i+1).
"""
import logging

import numpy as np

from platjones.algebra.recoupling import admissible, fmove
from platjones.constants import ASSOC_MOVE, DISSOC_MOVE, ROOT_MOVE

logger = logging.getLogger(__name__)


class PlanarTree(object):
    """ Rooted planar binary tree whose internal labels are fused to total spin 0.

    Attributes
    ----------
    num_leaves : int
        number of strands
    nodes : :obj:`frozenset` of :obj:`tuple`
        internal nodes (lo, hi), excluding the root and the leaves
    label_order : :obj:`list` of :obj:`tuple`
        nodes in the order used to sort labelings
    """
    def __init__(self, num_leaves, nodes, label_order=None):
        self.num_leaves = num_leaves
        self.nodes = frozenset(nodes)
        if label_order is None:
            label_order = sorted(self.nodes)
        self.label_order = list(label_order)

    @property
    def root(self):
        return (0, self.num_leaves)

    def is_leaf(self, node):
        return node[1] - node[0] == 1

    def children(self, node):
        """ Left and right children of an internal node or the root """
        lo, hi = node
        for split in range(hi - 1, lo, -1):
            left = (lo, split)
            if self.is_leaf(left) or left in self.nodes:
                right = (split, hi)
                if self.is_leaf(right) or right in self.nodes:
                    return left, right
        raise ValueError('Node %s has no children in tree' %(str(node)))

    def labelings(self, level, colors):
        """ All admissible labelings with leaves colored by `colors` and root label 0.

        Returns
        -------
        :obj:`list` of :obj:`dict`
            maps each internal node to its twice-spin label, sorted by label_order
        """
        def expand(node):
            if self.is_leaf(node):
                return [(int(colors[node[0]]), {})]
            left, right = self.children(node)
            out = []
            for a, lab_a in expand(left):
                for b, lab_b in expand(right):
                    for c in range(abs(a - b), a + b + 1, 2):
                        if not admissible(level, a, b, c):
                            continue
                        lab = dict(lab_a)
                        lab.update(lab_b)
                        lab[node] = c
                        out.append((c, lab))
            return out

        states = [lab for c, lab in expand(self.root) if c == 0]
        for lab in states:
            del lab[self.root]
        states.sort(key=self.key)
        return states

    def key(self, labels):
        return tuple(labels[n] for n in self.label_order)

    def __eq__(self, other):
        return isinstance(other, PlanarTree) and other.num_leaves == self.num_leaves \
            and other.nodes == self.nodes

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.num_leaves, self.nodes))

    def __repr__(self):
        return 'PlanarTree(%d, %s)' %(self.num_leaves, sorted(self.nodes))


def pair_node(i):
    """ Node p_i coupling strands 2i-1 and 2i (1-based i) """
    return (2 * i - 2, 2 * i)


def chain_node(i):
    """ Node r_i fusing p_1..p_{i+1} """
    return (0, 2 * i + 2)


def cross_pair_node(l):
    """ Node q_l coupling strands 2l and 2l+1 (1-based l) """
    return (2 * l - 1, 2 * l + 1)


def odd_tree(m):
    """ Tree of pairs (2i-1, 2i) fused left to right, the basis of the plat caps.

    Labelings sort by p_1..p_m then r_1..r_{m-2}.
    """
    pairs = [pair_node(i) for i in range(1, m + 1)]
    if m == 1:
        return PlanarTree(2, [], [])
    chains = [chain_node(i) for i in range(1, m - 1)]
    return PlanarTree(2 * m, pairs[:-1] + chains + ([pairs[-1]] if m >= 2 else []),
                      pairs + chains)


class TreeMove(object):
    """ One elementary rotation between two trees sharing all other nodes.

    Attributes
    ----------
    kind : :obj:`str`
        assoc ((A,B),C)->(A,(B,C)), dissoc the reverse, root ((A,B),(C,D))->((A,(B,C)),D)
    a, b, c : :obj:`tuple`
        the three subtrees being regrouped
    d : :obj:`tuple`
        the parent node of the regrouped pair, or the fourth leaf for root moves
    left_node, right_node : :obj:`tuple`
        the (A,B) and (B,C) nodes
    source, target : :obj:`PlanarTree`
    """
    def __init__(self, kind, a, b, c, d, source):
        self.kind = kind
        self.a, self.b, self.c, self.d = a, b, c, d
        self.left_node = (a[0], b[1])
        self.right_node = (b[0], c[1])
        self.source = source
        nodes = set(source.nodes)
        if kind == ASSOC_MOVE:
            nodes.remove(self.left_node)
            nodes.add(self.right_node)
        elif kind == DISSOC_MOVE:
            nodes.remove(self.right_node)
            nodes.add(self.left_node)
        elif kind == ROOT_MOVE:
            nodes.remove(self.left_node)
            nodes.remove((c[0], d[1]))
            nodes.add(self.right_node)
            nodes.add((a[0], c[1]))
        else:
            raise ValueError('Unknown move kind %s' %(kind))
        self.target = PlanarTree(source.num_leaves, nodes)

    @property
    def removed(self):
        """ Node whose label is replaced by the move """
        return self.right_node if self.kind == DISSOC_MOVE else self.left_node

    @property
    def added(self):
        return self.left_node if self.kind == DISSOC_MOVE else self.right_node

    def total(self, labels, colors):
        """ Label of the parent d in a labeling of either tree """
        return node_label(labels, colors, self.d)

    def coefficient(self, level, src_labels, dst_labels, colors):
        """ Amplitude of dst given src: [F^{abc}_d]_{e,f} """
        a = node_label(src_labels, colors, self.a)
        b = node_label(src_labels, colors, self.b)
        c = node_label(src_labels, colors, self.c)
        d = self.total(src_labels, colors)
        if self.kind == DISSOC_MOVE:
            e = node_label(dst_labels, colors, self.left_node)
            f = node_label(src_labels, colors, self.right_node)
        else:
            e = node_label(src_labels, colors, self.left_node)
            f = node_label(dst_labels, colors, self.right_node)
        return fmove(level, a, b, c, d).entry(e, f)

    def __repr__(self):
        return 'TreeMove(%s, %s, %s, %s, %s)' %(self.kind, self.a, self.b, self.c, self.d)


def node_label(labels, colors, node):
    """ Twice-spin label of a leaf, internal node or the root """
    if node[1] - node[0] == 1:
        return int(colors[node[0]])
    if node[0] == 0 and node[1] == len(colors):
        return 0
    return labels[node]


def leaf(i):
    return (i, i + 1)


def duality_moves(m):
    """ Sequence of 3m-5 moves carrying the odd tree to the tree pairing (2l, 2l+1).

    The first m-2 moves expose the strands one at a time, the next m-1 form the
    cross pairs q_l (the last of them rotating the root edge) and the final m-2
    move the left spine under strand 1.
    """
    if m < 2:
        return []
    tree = odd_tree(m)
    moves = []

    def push(kind, a, b, c, d):
        move = TreeMove(kind, a, b, c, d, moves[-1].target if moves else tree)
        moves.append(move)

    # expose strand 2i-1 under r_{i-1}
    for i in range(2, m):
        a = (0, 2 * i - 2)
        push(DISSOC_MOVE, a, leaf(2 * i - 2), leaf(2 * i - 1), (0, 2 * i))
    # form q_l = (2l-1, 2l+1)
    for l in range(1, m - 1):
        push(ASSOC_MOVE, (0, 2 * l - 1), leaf(2 * l - 1), leaf(2 * l), (0, 2 * l + 1))
    push(ROOT_MOVE, (0, 2 * m - 3), leaf(2 * m - 3), leaf(2 * m - 2), leaf(2 * m - 1))
    # hang the spine under strand 1
    for l in range(1, m - 1):
        push(ASSOC_MOVE, leaf(0), (1, 2 * l + 1), cross_pair_node(l + 1), (0, 2 * l + 3))
    return moves


def even_tree(m):
    """ Tree reached by duality_moves(m) """
    moves = duality_moves(m)
    if len(moves) == 0:
        return odd_tree(m)
    return moves[-1].target


def move_matrix(level, move, colors, src_states, dst_states):
    """ Dense matrix of one move between two enumerated labelings, shape (dst, src) """
    common = sorted(move.source.nodes & move.target.nodes)
    index = {}
    for j, lab in enumerate(dst_states):
        index.setdefault(tuple(lab[n] for n in common), []).append(j)
    mat = np.zeros([len(dst_states), len(src_states)])
    for i, src in enumerate(src_states):
        for j in index.get(tuple(src[n] for n in common), []):
            mat[j, i] = move.coefficient(level, src, dst_states[j], colors)
    return mat
