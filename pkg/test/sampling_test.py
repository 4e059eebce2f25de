import math
import os
from unittest import TestCase

import numpy as np

from platjones.algebra.qarith import Level, qint
from platjones.braids.braid import parse
from platjones.braids.oracle import LINK_TABLE
from platjones.circuits.register import check_size, layout
from platjones.circuits.sampling import (AncillaMeasurementRV, HadamardEstimator,
                                         approximate_colored_jones, chernoff_samples,
                                         convergence_slope, convergence_trace, hadamard_test)
from platjones.constants import MAX_QUBITS_ENV, X_AXIS, Y_AXIS
from platjones.errors import DomainError, SizeGuardError


class TestSampling(TestCase):

    def test_chernoff_samples(self):
        self.assertEqual(chernoff_samples(0.1, 0.25, 1.0), 832)
        self.assertEqual(chernoff_samples(0.1, 0.25), 832)
        n1 = chernoff_samples(0.1, 0.25)
        n2 = chernoff_samples(0.05, 0.25)
        self.assertTrue(abs(n2 - 4 * n1) <= 4)
        self.assertRaises(DomainError, chernoff_samples, 0.0, 0.25)
        self.assertRaises(DomainError, chernoff_samples, 0.1, 1.0)
        self.assertRaises(DomainError, chernoff_samples, 0.1, 0.0)
        self.assertRaises(DomainError, chernoff_samples, 0.1, 0.25, -1.0)

    def test_ancilla_rv(self):
        rv = AncillaMeasurementRV(1.0, seed=3)
        self.assertTrue(np.all(rv.sample(size=50) == 1.0))
        rv = AncillaMeasurementRV(-0.2, seed=3)
        samples = rv.sample(size=20000)
        self.assertTrue(set(np.unique(samples)) <= set([-1.0, 1.0]))
        self.assertTrue(abs(np.mean(samples) + 0.2) < 0.05)
        np.testing.assert_array_equal(AncillaMeasurementRV(0.3, seed=5).sample(size=100),
                                      AncillaMeasurementRV(0.3, seed=5).sample(size=100))

    def test_identity_hadamard(self):
        reg = layout(1, Level(2))
        report = hadamard_test(reg, [], 0, X_AXIS, 100, seed=1)
        self.assertEqual(report.estimate, 1.0)
        self.assertAlmostEqual(report.exact, 1.0)
        report = hadamard_test(reg, [], 0, Y_AXIS, 20000, seed=1)
        self.assertTrue(abs(report.estimate) < 0.05)
        self.assertEqual(len(report.per_batch_means), 10)
        self.assertRaises(DomainError, hadamard_test, reg, [], 0, X_AXIS, 0, 1)
        self.assertRaises(DomainError, hadamard_test, reg, [], 0, 'z', 10, 1)

    def test_amplitude_matches_exact(self):
        for k in [2, 3]:
            estimator = HadamardEstimator(Level(k), parse(LINK_TABLE['trefoil']))
            self.assertAlmostEqual(estimator.scale * estimator.amplitude, estimator.exact,
                                   places=10)

    def test_color_permuting_braid(self):
        level = Level(3)
        b = parse('strands=4 colors=1/2,1/2,1,1 word=2 1 3 2')
        self.assertNotEqual([int(c) for c in b.top.colors], [int(c) for c in b.bottom.colors])
        estimator = HadamardEstimator(level, b)
        self.assertAlmostEqual(abs(estimator.exact - (qint(level, 2) * qint(level, 3))), 0.0,
                               places=9)
        self.assertAlmostEqual(abs(estimator.scale * estimator.amplitude - estimator.exact), 0.0,
                               places=9)
        seeds = np.random.SeedSequence(7).spawn(40)
        rate = np.mean([estimator.estimate(0.3, seed).success for seed in seeds])
        self.assertTrue(rate >= 0.75)

    def test_trefoil_real_part(self):
        b = parse(LINK_TABLE['trefoil'])
        estimator = HadamardEstimator(Level(3), b)
        n = chernoff_samples(0.05, 0.25)
        hits = 0
        for seed in range(200):
            report = hadamard_test(estimator.reg, estimator.gates, estimator.initial, X_AXIS, n,
                                   seed)
            hits += abs(report.estimate.real - report.exact.real) <= 0.05
        self.assertTrue(hits / 200.0 >= 0.75)

    def test_sampling_guarantee(self):
        level = Level(3)
        estimator = HadamardEstimator(level, parse(LINK_TABLE['trefoil']))
        delta = 0.1 * estimator.scale
        self.assertEqual(estimator.num_samples(delta), 832)
        seeds = np.random.SeedSequence(2024).spawn(200)
        rate = np.mean([estimator.estimate(delta, seed).success for seed in seeds])
        self.assertTrue(rate >= 0.75)

    def test_identity_approximation(self):
        level = Level(2)
        b = parse('strands=2 colors=1/2,1/2 word=')
        hits = 0
        for seed in range(100):
            report = approximate_colored_jones(level, b, 0.1, seed)
            self.assertTrue(abs(report.estimate.real) <= qint(level, 2) + 1e-12)
            hits += report.success
        self.assertAlmostEqual(report.exact, math.sqrt(2))
        self.assertTrue(hits / 100.0 >= 0.75)

    def test_reproducible(self):
        b = parse(LINK_TABLE['hopf'])
        first = approximate_colored_jones(Level(3), b, 0.2, 11)
        second = approximate_colored_jones(Level(3), b, 0.2, 11)
        self.assertEqual(first.to_dict(), second.to_dict())
        rows = convergence_trace(first)
        self.assertEqual(len(rows), first.n_samples)
        self.assertEqual(rows[-1][0], first.n_samples)
        self.assertAlmostEqual(rows[-1][1], first.estimate.real)

    def test_spawned_seeds(self):
        estimator = HadamardEstimator(Level(3), parse(LINK_TABLE['hopf']))
        seeds = np.random.SeedSequence(5).spawn(3)
        reports = [estimator.estimate(0.3, seed) for seed in seeds]
        self.assertEqual([r.seed for r in reports], [5, 5, 5])
        self.assertEqual([r.to_dict()['spawn_key'] for r in reports], [[0], [1], [2]])
        self.assertEqual(estimator.estimate(0.3, seeds[1]).to_dict(), reports[1].to_dict())
        self.assertEqual(estimator.estimate(0.3, 5).to_dict()['spawn_key'], [])

    def test_convergence_rate(self):
        estimator = HadamardEstimator(Level(3), parse(LINK_TABLE['trefoil']))
        ns = [10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5]
        errors = []
        for n in ns:
            errs = [estimator.estimate(None, seed, n=n).error for seed in range(20)]
            errors.append(np.mean(errs))
        slope = convergence_slope(ns, errors)
        self.assertTrue(abs(slope + 0.5) <= 0.1)

    def test_size_guard(self):
        reg = layout(6, Level(3))
        self.assertRaises(SizeGuardError, check_size, reg)
        check_size(layout(3, Level(3)))
        old = os.environ.get(MAX_QUBITS_ENV)
        os.environ[MAX_QUBITS_ENV] = '10'
        try:
            self.assertRaises(SizeGuardError, check_size, layout(3, Level(3)))
        finally:
            if old is None:
                del os.environ[MAX_QUBITS_ENV]
            else:
                os.environ[MAX_QUBITS_ENV] = old
