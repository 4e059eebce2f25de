# -*- coding: utf-8 -*-
"""
Exception hierarchy for platjones.
Every error carries a machine-readable code and the exit status used by the CLI.
"""
from platjones.constants import EXIT_PARSE, EXIT_ADMISSIBILITY, EXIT_SIZE_GUARD, EXIT_OTHER


class PlatJonesError(Exception):
    """ Base class for all library errors.

    Attributes
    ----------
    code : :obj:`str`
        short machine-readable error code
    exit_code : int
        process exit status reported by the command line front end
    span : :obj:`tuple` of int, optional
        (start, end) character span of the offending input, when known
    """
    code = 'error'
    exit_code = EXIT_OTHER

    def __init__(self, message, span=None):
        Exception.__init__(self, message)
        self.message = message
        self.span = span

    def to_dict(self):
        """ Structured form of the error for JSON reports """
        err = {'code': self.code, 'message': self.message}
        if self.span is not None:
            err['span'] = list(self.span)
        return err


class ParseError(PlatJonesError, ValueError):
    """ Braid text does not follow the input grammar """
    code = 'syntax_error'
    exit_code = EXIT_PARSE

    def __init__(self, message, position=None, token=None):
        span = None
        if position is not None:
            span = (position, position + (len(token) if token else 0))
        PlatJonesError.__init__(self, message, span)
        self.position = position
        self.token = token


class GeneratorIndexError(PlatJonesError, IndexError):
    """ Generator index outside [1, 2m-1] """
    code = 'index_error'
    exit_code = EXIT_PARSE

    def __init__(self, message, position=None, token=None):
        span = None
        if position is not None:
            span = (position, position + (len(token) if token else 0))
        PlatJonesError.__init__(self, message, span)
        self.position = position
        self.token = token


class PlatError(PlatJonesError, ValueError):
    """ Caps cannot close the braid: unequal colors or equal orientations in a cap pair """
    code = 'plat_error'
    exit_code = EXIT_ADMISSIBILITY


class TruncationError(PlatJonesError, ValueError):
    """ A color exceeds k/2 """
    code = 'truncation_error'
    exit_code = EXIT_ADMISSIBILITY


class InadmissibleTriple(PlatJonesError, ValueError):
    """ Three spins violate the level-k fusion rules """
    code = 'inadmissible_triple'
    exit_code = EXIT_ADMISSIBILITY


class OutOfRange(PlatJonesError, ValueError):
    """ Argument outside the domain of the operation """
    code = 'out_of_range'


class EmptyBlock(PlatJonesError, ValueError):
    """ Recoupling block without admissible intermediate labels """
    code = 'empty_block'
    exit_code = EXIT_ADMISSIBILITY


class BasisMismatch(PlatJonesError, ValueError):
    """ Composition of representation matrices whose slices do not match """
    code = 'basis_mismatch'


class EncodingOverflow(PlatJonesError, ValueError):
    """ A label does not fit in its register block """
    code = 'overflow'


class DomainError(PlatJonesError, ValueError):
    """ Non-positive sampling parameters """
    code = 'domain_error'


class ColorError(PlatJonesError, ValueError):
    """ The bracket oracle only handles spin-1/2 colorings """
    code = 'color_error'
    exit_code = EXIT_ADMISSIBILITY


class OracleSizeError(PlatJonesError, ValueError):
    """ Too many crossings for the exponential state sum """
    code = 'size_error'
    exit_code = EXIT_SIZE_GUARD


class SizeGuardError(PlatJonesError, RuntimeError):
    """ Statevector simulation would exceed the qubit limit """
    code = 'size_guard'
    exit_code = EXIT_SIZE_GUARD


class UsageError(PlatJonesError, ValueError):
    """ Command line arguments rejected by the argument parser """
    code = 'usage_error'
