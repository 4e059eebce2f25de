# -*- coding: utf-8 -*-
"""
Validated parameters of one command line run.
"""
import logging

from platjones.constants import OUTPUT_FORMATS, RUN_MODES, SAMPLED_MODE
from platjones.errors import DomainError, OutOfRange

logger = logging.getLogger(__name__)


class RunConfig(object):
    """
    Parameters of a single run, checked on construction.

    Attributes
    ----------
    config : :obj:`dict`
        dictionary mapping parameter names to parameter values

    Notes
    -----
    Required configuration key-value pairs in Other Parameters.

    Other Parameters
    ----------------
    mode : :obj:`str`
        one of exact, sampled, compare, circuit-info
    k : int
        level
    braid : :obj:`str`
        inline braid text, or None when braid_file is given
    braid_file : :obj:`str`
        path of a file holding one braid
    delta : float
        additive error for sampled mode
    samples : int
        samples per axis, overriding the Chernoff count
    seed : int
        base seed of the sampler
    format : :obj:`str`
        one of json, csv, text
    trials : int
        number of independent seeded trials in sampled mode
    trace : :obj:`str`
        path of the convergence CSV, or None
    """
    REQUIRED_KEYS = ['mode', 'k', 'braid', 'braid_file', 'delta', 'samples', 'seed',
                     'format', 'trials']

    def __init__(self, config):
        # check valid config
        self.check_valid(config)

        # parse config
        for key, value in list(config.items()):
            setattr(self, key, value)

    def contains(self, key):
        """ Checks whether or not the key is supported """
        if key in list(self.__dict__.keys()):
            return True
        return False

    def __getattr__(self, key):
        if self.contains(key):
            return object.__getattribute__(self, key)
        return None

    def __getitem__(self, key):
        if self.contains(key):
            return object.__getattribute__(self, key)
        raise KeyError('Key %s not found' %(key))

    def keys(self):
        return list(self.__dict__.keys())

    def check_valid(self, config):
        """ Raise an exception if the config is missing required keys or holds bad values """
        for key in RunConfig.REQUIRED_KEYS:
            if key not in list(config.keys()):
                raise ValueError('Invalid configuration. Key %s must be specified' %(key))
        if config['mode'] not in RUN_MODES:
            raise OutOfRange('Unknown mode %s' %(config['mode']))
        if config['format'] not in OUTPUT_FORMATS:
            raise OutOfRange('Unknown output format %s' %(config['format']))
        if config['k'] is None or int(config['k']) < 1:
            raise OutOfRange('Level k must be at least 1')
        if (config['braid'] is None) == (config['braid_file'] is None):
            raise ValueError('Exactly one of braid and braid_file must be given')
        if config['mode'] == SAMPLED_MODE:
            delta, samples = config['delta'], config['samples']
            if (delta is None or delta <= 0) and (samples is None or samples <= 0):
                raise DomainError('Sampled mode needs delta > 0 or an explicit sample count')
        if int(config['trials']) < 1:
            raise OutOfRange('Need at least one trial')

    def braid_text(self):
        """ The braid, read from braid_file when no inline braid is given """
        if self.braid is not None:
            return self.braid
        with open(self.braid_file, 'r') as f:
            return f.read()


class RunConfigFactory:
    """ Helper class to build run configurations """
    @staticmethod
    def from_args(args, defaults):
        """ Run configuration from an argparse namespace, filling gaps from defaults.

        Parameters
        ----------
        args : :obj:`argparse.Namespace`
        defaults : :obj:`autolab_core.YamlConfig` or :obj:`dict`
            package defaults
        """
        delta = args.delta
        if delta is None and args.samples is None:
            delta = defaults['default_delta']
        config = {
            'mode': args.mode,
            'k': args.k,
            'braid': args.braid,
            'braid_file': args.braid_file,
            'delta': delta,
            'samples': args.samples,
            'seed': args.seed if args.seed is not None else defaults['default_seed'],
            'format': args.format,
            'trials': args.trials if args.trials is not None else defaults['default_trials'],
            'trace': getattr(args, 'trace', None)
        }
        return RunConfig(config)
