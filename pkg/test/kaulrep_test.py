import itertools
from unittest import TestCase

import numpy as np
from scipy.special import comb

from platjones.algebra.qarith import Level, Spin
from platjones.braids.braid import LevelSlice, StrandState, default_orientation, parse
from platjones.braids.fusion_tree import (TreeMove, cross_pair_node, duality_moves, leaf,
                                          move_matrix, odd_tree)
from platjones.braids.invariant import evaluate_trace_of_word
from platjones.braids.kaulrep import (FusionPath, compose, duality_decomposition, duality_matrix,
                                      enumerate_basis, even_generator, generator_matrix,
                                      half_twist_eigenvalue, odd_generator, word_matrix)
from platjones.constants import ASSOC_MOVE, DISSOC_MOVE, RELATION_TOL, ROOT_MOVE, UNITARITY_TOL
from platjones.errors import BasisMismatch, GeneratorIndexError, InadmissibleTriple


def make_slice(colors, ups=None):
    if ups is None:
        ups = default_orientation(len(colors))
    return LevelSlice([StrandState(Spin(c), u) for c, u in zip(colors, ups)])


def product(level, slice, letters):
    """ Matrix of a sequence of letters starting at `slice`, with the slice reached """
    basis = enumerate_basis(level, slice)
    mat = np.eye(basis.dim, dtype=np.complex128)
    for letter in letters:
        rep = generator_matrix(level, basis, letter)
        mat = rep.entries.dot(mat)
        basis = rep.target
    return mat, basis.slice


def colorings(m, k):
    return [c for c in itertools.product([0, 1, 2], repeat=2 * m) if max(c) <= k]


def max_error(a, b):
    if a.size == 0:
        return 0.0
    return np.max(np.abs(a - b))


class TestKaulRep(TestCase):

    def test_enumerate_basis(self):
        self.assertEqual(enumerate_basis(Level(1), make_slice([1, 1, 1, 1])).dim, 1)
        basis = enumerate_basis(Level(2), make_slice([1, 1, 1, 1]))
        self.assertEqual(basis.dim, 2)
        self.assertEqual([int(p.p[0]) for p in basis.paths], [0, 2])
        basis = enumerate_basis(Level(3), make_slice([0, 0]))
        self.assertEqual(basis.dim, 1)
        self.assertTrue(basis.paths[0].is_zero())

    def test_basis_order_and_labels(self):
        basis = enumerate_basis(Level(4), make_slice([1, 1, 1, 1, 1, 1, 1, 1]))
        keys = [tuple(int(x) for x in p.free_labels) for p in basis.paths]
        self.assertEqual(keys, sorted(keys))
        for path in basis.paths:
            self.assertEqual(len(path.free_labels), 2 * 4 - 3)
            self.assertEqual(FusionPath.from_labels(path.colors, path.to_labels()), path)

    def test_catalan_dimension(self):
        for m in range(1, 6):
            basis = enumerate_basis(Level(2 * m), make_slice([1] * (2 * m)))
            self.assertEqual(basis.dim, int(comb(2 * m, m, exact=True)) // (m + 1))

    def test_half_twist_eigenvalue(self):
        level = Level(3)
        q = level.q
        self.assertAlmostEqual(half_twist_eigenvalue(level, 1, 1, 2, True), q ** 0.5)
        self.assertAlmostEqual(half_twist_eigenvalue(level, 1, 1, 0, True), -q ** 1.5)
        for j in range(4):
            self.assertAlmostEqual(half_twist_eigenvalue(level, j, j, 0, False), 1.0)
        value = half_twist_eigenvalue(level, 1, 2, 1, False)
        self.assertAlmostEqual(half_twist_eigenvalue(level, 1, 2, 1, False, inverse=True),
                               np.conj(value))
        self.assertAlmostEqual(abs(value), 1.0)
        self.assertRaises(InadmissibleTriple, half_twist_eigenvalue, level, 1, 1, 1, True)

    def test_odd_generator(self):
        level = Level(1)
        basis = enumerate_basis(level, make_slice([1, 1, 1, 1]))
        rep = odd_generator(level, basis, 1)
        self.assertEqual(rep.entries.shape, (1, 1))
        self.assertAlmostEqual(rep.entries[0, 0], half_twist_eigenvalue(level, 1, 1, 0, False))

        level = Level(3)
        basis = enumerate_basis(level, make_slice([1, 1, 2, 2, 1, 1]))
        for g in [1, 3, 5]:
            rep = odd_generator(level, basis, g)
            off = rep.entries - np.diag(np.diag(rep.entries))
            self.assertEqual(np.max(np.abs(off)), 0.0)
            back = odd_generator(level, rep.target, g, inverse=True)
            np.testing.assert_allclose(compose(back, rep).entries, np.eye(basis.dim), atol=1e-12)
        self.assertRaises(GeneratorIndexError, odd_generator, level, basis, 2)
        self.assertRaises(GeneratorIndexError, odd_generator, level, basis, 7)
        self.assertRaises(GeneratorIndexError, even_generator, level, basis, 3)

    def test_duality_move_count(self):
        for m in range(2, 7):
            self.assertEqual(len(duality_moves(m)), 3 * m - 5)
            basis = enumerate_basis(Level(3), make_slice([1] * (2 * m)))
            self.assertEqual(len(duality_decomposition(Level(3), basis)), 3 * m - 5)
        self.assertEqual(duality_moves(2)[0].kind, ROOT_MOVE)

    def test_duality_matrix_orthogonal(self):
        cases = [(k, m) for k in range(1, 4) for m in range(2, 5)] + [(2, 5), (2, 6), (3, 5), (3, 6)]
        for k, m in cases:
            basis = enumerate_basis(Level(k), make_slice([1] * (2 * m)))
            a = duality_matrix(Level(k), basis)
            inv = duality_matrix(Level(k), basis, inverse=True)
            self.assertTrue(max_error(inv.dot(a), np.eye(basis.dim)) <= UNITARITY_TOL)
            self.assertTrue(max_error(a.dot(inv), np.eye(a.shape[0])) <= UNITARITY_TOL)

    def test_duality_self_inverse(self):
        for k in range(2, 6):
            level = Level(k)
            for m in [2, 3]:
                basis = enumerate_basis(level, make_slice([1] * (2 * m)))
                a = duality_matrix(level, basis)
                self.assertTrue(max_error(a.dot(a), np.eye(basis.dim)) <= UNITARITY_TOL)
            basis = enumerate_basis(level, make_slice([2, 2, 2, 2]))
            a = duality_matrix(level, basis)
            self.assertTrue(max_error(a.dot(a), np.eye(basis.dim)) <= UNITARITY_TOL)

    def test_duality_commuting_moves(self):
        # exposing strand 5 commutes with forming the first cross pair
        m = 4
        level = Level(3)
        colors = tuple(Spin(1) for _ in range(2 * m))
        tree = odd_tree(m)
        specs = [(DISSOC_MOVE, (0, 2), leaf(2), leaf(3), (0, 4)),
                 (ASSOC_MOVE, leaf(0), leaf(1), leaf(2), (0, 3)),
                 (DISSOC_MOVE, (0, 4), leaf(4), leaf(5), (0, 6)),
                 (ASSOC_MOVE, (0, 3), leaf(3), leaf(4), (0, 5)),
                 (ROOT_MOVE, (0, 5), leaf(5), leaf(6), leaf(7)),
                 (ASSOC_MOVE, leaf(0), (1, 3), cross_pair_node(2), (0, 5)),
                 (ASSOC_MOVE, leaf(0), (1, 5), cross_pair_node(3), (0, 7))]
        states = tree.labelings(level, colors)
        mat = np.eye(len(states))
        for kind, a, b, c, d in specs:
            move = TreeMove(kind, a, b, c, d, tree)
            dst = move.target.labelings(level, colors)
            mat = move_matrix(level, move, colors, states, dst).dot(mat)
            tree, states = move.target, dst
        self.assertEqual(tree, duality_moves(m)[-1].target)
        basis = enumerate_basis(level, make_slice([1] * (2 * m)))
        self.assertTrue(max_error(mat, duality_matrix(level, basis)) <= UNITARITY_TOL)

    def test_m2_single_move(self):
        level = Level(2)
        basis = enumerate_basis(level, make_slice([1, 1, 1, 1]))
        steps = duality_decomposition(level, basis)
        self.assertEqual(len(steps), 1)
        rep = even_generator(level, basis, 2)
        self.assertEqual(rep.entries.shape, (2, 2))

    def test_generators_unitary(self):
        for k in range(1, 4):
            level = Level(k)
            for m in range(1, 4):
                for colors in colorings(m, k):
                    for ups in [None, [True] * (2 * m)]:
                        basis = enumerate_basis(level, make_slice(colors, ups))
                        if basis.dim == 0:
                            continue
                        for g in range(1, 2 * m):
                            for inverse in [False, True]:
                                u = generator_matrix(level, basis, -g if inverse else g).entries
                                err = max_error(u.dot(u.conj().T), np.eye(u.shape[0]))
                                self.assertTrue(err <= UNITARITY_TOL)

    def test_representation_relations(self):
        for k in range(1, 4):
            level = Level(k)
            for m in range(2, 4):
                mixed = [True, False, False, True, True, False][:2 * m]
                for colors, ups in itertools.product(colorings(m, k), [None, mixed]):
                    slice = make_slice(colors, ups)
                    if enumerate_basis(level, slice).dim == 0:
                        continue
                    for i in range(1, 2 * m):
                        # inverse
                        mat, end = product(level, slice, [i, -i])
                        self.assertEqual(end, slice)
                        self.assertTrue(max_error(mat, np.eye(mat.shape[0])) <= RELATION_TOL)
                        mat, end = product(level, slice, [-i, i])
                        self.assertTrue(max_error(mat, np.eye(mat.shape[0])) <= RELATION_TOL)
                        # braid relation
                        if i + 1 < 2 * m:
                            lhs, end_l = product(level, slice, [i, i + 1, i])
                            rhs, end_r = product(level, slice, [i + 1, i, i + 1])
                            self.assertEqual(end_l, end_r)
                            self.assertTrue(max_error(lhs, rhs) <= RELATION_TOL)
                        # far commutativity
                        for j in range(i + 2, 2 * m):
                            lhs, _ = product(level, slice, [i, j])
                            rhs, _ = product(level, slice, [j, i])
                            self.assertTrue(max_error(lhs, rhs) <= RELATION_TOL)

    def test_compose_mismatch(self):
        level = Level(2)
        basis = enumerate_basis(level, make_slice([1, 1, 2, 2]))
        rep = even_generator(level, basis, 2)
        self.assertRaises(BasisMismatch, compose, rep, rep)

    def test_word_matrix(self):
        level = Level(3)
        b = parse('strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2 orient=uddu')
        rep = word_matrix(level, b)
        np.testing.assert_allclose(rep.entries.conj().T.dot(rep.entries), np.eye(rep.source.dim),
                                   atol=UNITARITY_TOL)
        element = rep.entries[rep.target.zero_index(), rep.source.zero_index()]
        self.assertAlmostEqual(abs(element - evaluate_trace_of_word(level, b)), 0.0, places=9)
