# -*- coding: utf-8 -*-
"""
Package-wide constants.
"""
import os

# Default config shipped with the package
PLATJONES_DIR = os.path.realpath(os.path.dirname(os.path.realpath(__file__)))
PLATJONES_DEFAULTS_FILE = os.path.join(PLATJONES_DIR, 'config.yaml')

# Environment override of the simulation size guard
MAX_QUBITS_ENV = 'PLATJONES_MAX_QUBITS'

# Numerical tolerances
UNITARITY_TOL = 1e-10
RELATION_TOL = 1e-9
ORACLE_TOL = 1e-6

# Process exit codes
EXIT_OK = 0
EXIT_PARSE = 1
EXIT_ADMISSIBILITY = 2
EXIT_SIZE_GUARD = 3
EXIT_OTHER = 4

# Run modes
EXACT_MODE = 'exact'
SAMPLED_MODE = 'sampled'
COMPARE_MODE = 'compare'
CIRCUIT_INFO_MODE = 'circuit-info'
RUN_MODES = [EXACT_MODE, SAMPLED_MODE, COMPARE_MODE, CIRCUIT_INFO_MODE]

# Output formats
JSON_FORMAT = 'json'
CSV_FORMAT = 'csv'
TEXT_FORMAT = 'text'
OUTPUT_FORMATS = [JSON_FORMAT, CSV_FORMAT, TEXT_FORMAT]

# Measurement axes of the Hadamard test
X_AXIS = 'x'
Y_AXIS = 'y'

# Gate kinds
PHASE_GATE = 'phase'
Q6J_GATE = 'q6j'
CONTROLLED_GATE = 'controlled'
RELABEL_GATE = 'relabel'

# Elementary move kinds on planar fusion trees
ASSOC_MOVE = 'assoc'      # ((A,B),C) -> (A,(B,C))
DISSOC_MOVE = 'dissoc'    # (A,(B,C)) -> ((A,B),C)
ROOT_MOVE = 'root'        # ((A,B),(C,D)) -> ((A,(B,C)),D)

# Orientation symbols of the braid grammar
UP = 'u'
DOWN = 'd'
