# -*- coding: utf-8 -*-
"""
Command line front end: exact, sampled, compare and circuit-info runs.
"""
import argparse
import csv
import io
import json
import logging
import sys

from platjones.api import PlatJones
from platjones.circuits.sampling import convergence_trace
from platjones.constants import (CIRCUIT_INFO_MODE, COMPARE_MODE, CSV_FORMAT, EXACT_MODE,
                                 EXIT_OK, EXIT_OTHER, JSON_FORMAT, OUTPUT_FORMATS, RUN_MODES,
                                 SAMPLED_MODE)
from platjones.errors import PlatJonesError, UsageError
from platjones.run_config import RunConfigFactory

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """ Raises UsageError on bad arguments instead of exiting with status 2 """
    def error(self, message):
        raise UsageError('%s: %s' %(self.prog, message))


def make_parser():
    parser = ArgumentParser(
        description='Colored Jones invariants of plat-closed braids')
    parser.add_argument('--mode', type=str, default=EXACT_MODE, choices=RUN_MODES,
                        help='what to compute')
    parser.add_argument('--k', type=int, required=True, help='level, q = exp(2 pi i/(k+2))')
    parser.add_argument('--braid', type=str, default=None,
                        help='braid text, JSON, or the name of a stock link')
    parser.add_argument('--braid-file', dest='braid_file', type=str, default=None,
                        help='file holding one braid')
    parser.add_argument('--delta', type=float, default=None, help='additive error of the estimate')
    parser.add_argument('--samples', type=int, default=None, help='samples per axis')
    parser.add_argument('--seed', type=int, default=None, help='sampler seed')
    parser.add_argument('--format', type=str, default=JSON_FORMAT, choices=OUTPUT_FORMATS,
                        help='output format')
    parser.add_argument('--trials', type=int, default=None, help='independent seeded trials')
    parser.add_argument('--trace', type=str, default=None,
                        help='CSV file for the running mean of the first trial')
    parser.add_argument('--verbose', action='store_true', help='log progress at INFO level')
    return parser


def _flatten(report, prefix=''):
    rows = []
    for key in sorted(report.keys()):
        value = report[key]
        name = '%s%s' %(prefix, key)
        if isinstance(value, dict):
            rows.extend(_flatten(value, name + '.'))
        elif isinstance(value, list) and len(value) > 0 and isinstance(value[0], dict):
            for i, item in enumerate(value):
                rows.extend(_flatten(item, '%s.%d.' %(name, i)))
        else:
            rows.append((name, value))
    return rows


def render_report(report, fmt):
    """ Serializes a report dict in the requested format """
    if fmt == JSON_FORMAT:
        return json.dumps(report, sort_keys=True, indent=2)
    rows = _flatten(report)
    if fmt == CSV_FORMAT:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(['key', 'value'])
        for row in rows:
            writer.writerow(row)
        return out.getvalue().rstrip('\n')
    return '\n'.join('%s: %s' %(key, value) for key, value in rows)


def write_trace(filename, report):
    """ Running means of a SampleReport as CSV """
    with open(filename, 'w') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['sample', 'mean_re', 'mean_im'])
        for row in convergence_trace(report):
            writer.writerow(row)


def run(config, api=None):
    """ Executes one run.

    Parameters
    ----------
    config : :obj:`RunConfig`
    api : :obj:`PlatJones`

    Returns
    -------
    int
        exit code
    :obj:`str`
        serialized report or error
    """
    if api is None:
        api = PlatJones()
    try:
        text = config.braid_text()
        if config.mode == EXACT_MODE:
            report = api.exact(text, config.k)
        elif config.mode == SAMPLED_MODE:
            report, first = api.sampled(text, config.k, delta=config.delta, seed=config.seed,
                                        samples=config.samples, trials=config.trials)
            if config.trace is not None:
                write_trace(config.trace, first)
        elif config.mode == COMPARE_MODE:
            report = api.compare(text, config.k)
        elif config.mode == CIRCUIT_INFO_MODE:
            report = api.circuit_info(text, config.k)
        else:
            raise ValueError('Mode %s not supported' %(config.mode))
    except PlatJonesError as e:
        logger.debug('Run failed', exc_info=True)
        return e.exit_code, render_report({'error': e.to_dict()}, config.format)
    except (ValueError, TypeError, KeyError, IOError) as e:
        logger.debug('Run failed', exc_info=True)
        return EXIT_OTHER, render_report({'error': {'code': 'error', 'message': str(e)}},
                                         config.format)
    return EXIT_OK, render_report(report, config.format)


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stdout.write(render_report({'error': e.to_dict()}, JSON_FORMAT) + '\n')
        return e.exit_code
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)

    api = PlatJones()
    try:
        config = RunConfigFactory.from_args(args, api.default_config)
    except (PlatJonesError, ValueError) as e:
        err = e.to_dict() if isinstance(e, PlatJonesError) else {'code': 'config_error',
                                                                  'message': str(e)}
        sys.stdout.write(render_report({'error': err}, args.format) + '\n')
        return getattr(e, 'exit_code', EXIT_OTHER)

    code, output = run(config, api)
    sys.stdout.write(output + '\n')
    return code


if __name__ == '__main__':
    sys.exit(main())
