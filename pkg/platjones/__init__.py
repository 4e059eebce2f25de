# -*- coding: utf-8 -*-
from platjones.algebra.qarith import Level, Spin
from platjones.braids.braid import ColoredBraidWord, LevelSlice, StrandState, mirror, parse, render
from platjones.braids.invariant import InvariantValue, evaluate, evaluate_trace_of_word
from platjones.circuits.sampling import SampleReport, approximate_colored_jones, chernoff_samples
from platjones.api import PlatJones

__all__ = ['Level', 'Spin', 'ColoredBraidWord', 'LevelSlice', 'StrandState', 'mirror', 'parse',
           'render', 'InvariantValue', 'evaluate', 'evaluate_trace_of_word', 'SampleReport',
           'approximate_colored_jones', 'chernoff_samples', 'PlatJones']
