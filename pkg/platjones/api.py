# -*- coding: utf-8 -*-
"""
platjones Python API used by the command line interface.
"""
import copy
import logging
import time

import numpy as np

from autolab_core import YamlConfig

from platjones.algebra.qarith import Level
from platjones.braids.braid import parse, render
from platjones.braids.invariant import evaluate
from platjones.braids.oracle import LINK_TABLE, compare
from platjones.circuits.circuitsim import closure_gates, compile_braid, gate_counts
from platjones.circuits.register import check_size, layout, max_qubits
from platjones.circuits.sampling import HadamardEstimator
from platjones.constants import PLATJONES_DEFAULTS_FILE

logger = logging.getLogger(__name__)


class PlatJones(object):
    """ Entry point for exact, sampled and cross-checked evaluations.

    Attributes
    ----------
    default_config : :obj:`autolab_core.YamlConfig`
        package defaults, see Other Parameters

    Other Parameters
    ----------------
    oracle_tol
        modulus agreement required in compare mode
    max_qubits
        size guard of the statevector simulation, PLATJONES_MAX_QUBITS overrides
    oracle_max_crossings
        largest word handled by the bracket oracle
    fail_prob
        failure probability of the additive approximation
    variance_bound
        variance bound of the +-1 ancilla outcomes
    num_batches
        number of batch means reported per estimate
    """
    def __init__(self, config_filename=PLATJONES_DEFAULTS_FILE):
        self.default_config = YamlConfig(config_filename)

    def _get_config(self, updates=None):
        """ Copy of the defaults with updates applied """
        cfg = copy.deepcopy(self.default_config.config)
        if updates is not None:
            cfg.update(updates)
        return cfg

    @staticmethod
    def load_braid(text):
        """ Braid from its text, JSON or the name of a stock link """
        name = text.strip()
        if name in LINK_TABLE:
            return parse(LINK_TABLE[name])
        return parse(text)

    def exact(self, braid, k):
        """ Exact invariant of the plat closure.

        Parameters
        ----------
        braid : :obj:`str` or :obj:`ColoredBraidWord`
        k : int
            level
        """
        b = braid if not isinstance(braid, str) else self.load_braid(braid)
        value = evaluate(Level(k), b)
        report = value.to_dict()
        report['braid'] = render(b)
        return report

    def sampled(self, braid, k, delta=None, seed=0, samples=None, trials=1, config=None):
        """ Hadamard-test estimate of the invariant, over one or more seeded trials.

        Returns
        -------
        :obj:`dict`
            report of the first trial, and the success rate over all trials
        :obj:`SampleReport`
            the first trial
        """
        cfg = self._get_config(config)
        b = braid if not isinstance(braid, str) else self.load_braid(braid)
        level = Level(k)
        check_size(layout(b.m, level), limit=max_qubits(cfg['max_qubits']))
        estimator = HadamardEstimator(level, b)
        if delta is None:
            delta = cfg['default_delta']

        tic = time.time()
        seeds = np.random.SeedSequence(seed).spawn(trials) if trials > 1 else [seed]
        reports = []
        for trial_seed in seeds:
            reports.append(estimator.estimate(delta, trial_seed, n=samples,
                                              fail_prob=cfg['fail_prob'],
                                              variance_bound=cfg['variance_bound'],
                                              num_batches=cfg['num_batches']))
        logger.info('Ran %d trials in %.3f sec', trials, time.time() - tic)

        report = reports[0].to_dict()
        report['seed'] = seed
        report['braid'] = render(b)
        report['k'] = k
        report['qdim_product'] = estimator.scale
        report['trials'] = trials
        report['success_rate'] = float(np.mean([r.success for r in reports]))
        return report, reports[0]

    def compare(self, braid, k, config=None):
        """ Representation value against the bracket oracle """
        cfg = self._get_config(config)
        b = braid if not isinstance(braid, str) else self.load_braid(braid)
        record = compare(Level(k), b, tol=cfg['oracle_tol'],
                         max_crossings=cfg['oracle_max_crossings'])
        report = dict(record._asdict())
        report['braid'] = render(b)
        report['k'] = k
        return report

    def circuit_info(self, braid, k):
        """ Register size and gate counts of the compiled circuit """
        b = braid if not isinstance(braid, str) else self.load_braid(braid)
        level = Level(k)
        reg = layout(b.m, level)
        gates = compile_braid(reg, b) + closure_gates(reg, b)
        report = reg.to_dict()
        report['gates'] = gate_counts(gates, b)
        report['expected_qubits'] = (4 * b.m - 3) * int(np.ceil(np.log2(k + 1)))
        report['q6j_per_even_letter'] = 2 * (3 * b.m - 5) if b.m >= 2 else 0
        report['braid'] = render(b)
        return report
