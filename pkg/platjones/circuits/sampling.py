# -*- coding: utf-8 -*-
"""
Hadamard-test sampling of <psi|U|psi> on the simulated register and the additive
approximation of the colored Jones invariant built on it.
"""
import logging
import math
import time

import numpy as np
import scipy.stats

from autolab_core import RandomVariable

from platjones.algebra.qarith import as_level, qdim_product
from platjones.braids.invariant import cap_colors, complex_to_dict, evaluate
from platjones.braids.kaulrep import enumerate_basis
from platjones.circuits.circuitsim import apply_gate, basis_state, closure_gates, compile_braid
from platjones.circuits.register import check_size, encode_path, layout
from platjones.constants import X_AXIS, Y_AXIS
from platjones.errors import DomainError, PlatError

logger = logging.getLogger(__name__)


class AncillaMeasurementRV(RandomVariable):
    """ +-1 outcome of measuring the Hadamard-test ancilla along one axis.

    Attributes
    ----------
    expectation : float
        <sigma> of the ancilla, in [-1, 1]
    p_plus : float
        probability of the outcome +1
    """
    def __init__(self, expectation, seed=None):
        self.expectation = float(expectation)
        self.p_plus = float(np.clip((1.0 + self.expectation) / 2.0, 0.0, 1.0))
        self.rng_ = np.random.default_rng(seed)
        RandomVariable.__init__(self, 0)

    def sample(self, size=1):
        """ Draws `size` outcomes in {-1, +1} """
        return np.where(self.rng_.random(size) < self.p_plus, 1.0, -1.0)


class SampleReport(object):
    """ Exact value next to its sampled estimate.

    Attributes
    ----------
    exact : complex
    estimate : complex
    n_samples : int
        samples per measured axis
    delta : float
    seed : int
        entropy of the seed
    spawn_key : :obj:`tuple` of int
        spawn key when the seed was a spawned SeedSequence, else empty
    per_batch_means : :obj:`list` of complex
        means of consecutive batches of samples
    trace : :obj:`numpy.ndarray`
        running mean after each sample, complex
    scale : float
        factor applied to the ancilla means
    """
    def __init__(self, exact, estimate, n_samples, delta, seed, per_batch_means,
                 trace=None, scale=1.0):
        self.exact = complex(exact)
        self.estimate = complex(estimate)
        self.n_samples = int(n_samples)
        self.delta = delta
        if isinstance(seed, np.random.SeedSequence):
            self.seed, self.spawn_key = seed.entropy, tuple(seed.spawn_key)
        else:
            self.seed, self.spawn_key = seed, ()
        self.per_batch_means = [complex(z) for z in per_batch_means]
        self.trace = trace
        self.scale = scale

    @property
    def error(self):
        return abs(self.estimate - self.exact)

    @property
    def success(self):
        """ Whether the estimate landed within delta """
        return self.delta is not None and self.error <= self.delta

    def to_dict(self):
        return {
            'exact': complex_to_dict(self.exact),
            'estimate': complex_to_dict(self.estimate),
            'n_samples': self.n_samples,
            'delta': self.delta,
            'seed': self.seed,
            'spawn_key': list(self.spawn_key),
            'scale': self.scale,
            'error': self.error,
            'per_batch_means': [complex_to_dict(z) for z in self.per_batch_means]
        }

    def __repr__(self):
        return 'SampleReport(exact=%s, estimate=%s, n=%d)' %(self.exact, self.estimate,
                                                            self.n_samples)


def chernoff_samples(delta, fail_prob, variance_bound=1.0):
    """ Smallest n with 2 exp(-n delta^2 / (4 v)) <= fail_prob.

    Raises
    ------
    DomainError
        delta or variance_bound not positive, or fail_prob outside (0, 1)
    """
    if delta <= 0 or variance_bound <= 0:
        raise DomainError('delta and variance bound must be positive')
    if fail_prob <= 0 or fail_prob >= 1:
        raise DomainError('Failure probability must lie in (0, 1), got %s' %(fail_prob))
    return int(math.ceil(4.0 * variance_bound / delta ** 2 * math.log(2.0 / fail_prob)))


def hadamard_amplitude(reg, gates, initial):
    """ <psi|U|psi> read off the ancilla of the controlled-U circuit.

    The ancilla starts in (|0> + |1>)/sqrt(2) and every gate is controlled on it.
    """
    check_size(reg)
    psi = basis_state(reg, initial)
    state = np.stack([psi, psi]) / np.sqrt(2.0)
    for gate in gates:
        state = apply_gate(state, gate.controlled())
    overlap = np.vdot(state[0], state[1])
    # <sigma_x> = 2 Re <a|b>, <sigma_y> = 2 Im <a|b>
    return complex(2.0 * overlap)


def _means(samples, num_batches):
    return [np.mean(batch) for batch in np.array_split(samples, min(num_batches, len(samples)))]


def hadamard_test(reg, gates, initial, axis, n, seed, num_batches=10):
    """ Samples the ancilla along x (real part) or y (imaginary part) n times.

    Parameters
    ----------
    reg : :obj:`RegisterLayout`
    gates : :obj:`list` of :obj:`GateOp`
    initial : int
        basis index of |psi>
    axis : :obj:`str`
        x or y
    n : int
        number of samples
    seed : int or :obj:`numpy.random.SeedSequence`

    Returns
    -------
    :obj:`SampleReport`
    """
    if n < 1:
        raise DomainError('Need at least one sample, got %d' %(n))
    if axis not in (X_AXIS, Y_AXIS):
        raise DomainError('Unknown measurement axis %s' %(axis))
    amplitude = hadamard_amplitude(reg, gates, initial)
    unit = 1.0 if axis == X_AXIS else 1.0j
    expectation = amplitude.real if axis == X_AXIS else amplitude.imag
    samples = AncillaMeasurementRV(expectation, seed).sample(size=n)
    trace = unit * np.cumsum(samples) / np.arange(1, n + 1)
    return SampleReport(amplitude, unit * np.mean(samples), n, None, seed,
                        [unit * z for z in _means(samples, num_batches)], trace=trace)


def sample_estimate(amplitude, exact, n, seed, scale=1.0, delta=None, num_batches=10):
    """ Both-axis estimate of a known amplitude, scaled; seeds spawned per axis """
    seq = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    seed_x, seed_y = [np.random.SeedSequence(seq.entropy, spawn_key=tuple(seq.spawn_key) + (i,))
                      for i in range(2)]
    xs = AncillaMeasurementRV(amplitude.real, seed_x).sample(size=n)
    ys = AncillaMeasurementRV(amplitude.imag, seed_y).sample(size=n)
    zs = scale * (xs + 1.0j * ys)
    trace = np.cumsum(zs) / np.arange(1, n + 1)
    return SampleReport(exact, np.mean(zs), n, delta, seed, _means(zs, num_batches),
                        trace=trace, scale=scale)


class HadamardEstimator(object):
    """ Simulates the circuit of a braid once and samples it for any number of seeds """
    def __init__(self, level, b):
        self.level = as_level(level)
        self.braid = b
        self.reg = layout(b.m, self.level)
        check_size(self.reg)
        basis = enumerate_basis(self.level, b.bottom)
        start = basis.zero_index()
        if start is None:
            raise PlatError('All-zero fusion path missing from the bottom basis')
        self.initial = encode_path(self.reg, basis.paths[start])
        self.gates = compile_braid(self.reg, b) + closure_gates(self.reg, b)
        self.scale = qdim_product(self.level, cap_colors(b))
        self.exact = evaluate(self.level, b).value

        tic = time.time()
        self.amplitude = hadamard_amplitude(self.reg, self.gates, self.initial)
        logger.info('Simulated %d gates on %d+1 qubits in %.3f sec', len(self.gates),
                    self.reg.num_qubits, time.time() - tic)

    def num_samples(self, delta, fail_prob=0.25, variance_bound=1.0):
        """ Samples per axis for an additive error delta on the invariant """
        return chernoff_samples(delta / self.scale, fail_prob, variance_bound)

    def estimate(self, delta, seed, n=None, fail_prob=0.25, variance_bound=1.0, num_batches=10):
        if n is None:
            n = self.num_samples(delta, fail_prob, variance_bound)
        return sample_estimate(self.amplitude, self.exact, n, seed, scale=self.scale,
                               delta=delta, num_batches=num_batches)


def approximate_colored_jones(level, b, delta, seed, n=None, fail_prob=0.25, variance_bound=1.0,
                              num_batches=10):
    """ Additive approximation Z of the invariant with Pr(|V - Z| <= delta) >= 1 - fail_prob.

    Each axis gets chernoff_samples(delta / prod [2j+1], fail_prob, v) samples and the
    ancilla means are rescaled by the quantum-dimension product.
    """
    estimator = HadamardEstimator(level, b)
    report = estimator.estimate(delta, seed, n=n, fail_prob=fail_prob,
                                variance_bound=variance_bound, num_batches=num_batches)
    logger.info('Estimated %s from %d samples per axis (exact %s)', report.estimate,
                report.n_samples, report.exact)
    return report


def convergence_trace(report):
    """ Rows (sample index, running mean re, running mean im) """
    return [(i + 1, float(z.real), float(z.imag)) for i, z in enumerate(report.trace)]


def convergence_slope(ns, errors):
    """ Slope of log(error) against log(n) """
    fit = scipy.stats.linregress(np.log(ns), np.log(errors))
    return fit.slope
