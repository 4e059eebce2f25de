# -*- coding: utf-8 -*-
"""
Quantum integers, factorials, dimensions and Casimirs of SU(2) at q = exp(2 pi i / (k+2)).
Spins are stored as twice their value so that all admissibility arithmetic stays integral.
"""
from fractions import Fraction
import logging
import re

import numpy as np

from platjones.errors import OutOfRange, ParseError, TruncationError

logger = logging.getLogger(__name__)

_SPIN_RE = re.compile(r'^\s*(\d+)\s*(?:/\s*(\d+))?\s*$')


class Spin(int):
    """ Half-integer spin, represented by the integer 2j.

    Spin(1) is spin 1/2, Spin(2) is spin 1. Ordering and hashing are those of 2j.
    """
    def __new__(cls, twice):
        twice = int(twice)
        if twice < 0:
            raise OutOfRange('Spin must be non-negative, got 2j=%d' %(twice))
        return int.__new__(cls, twice)

    @staticmethod
    def from_value(value):
        """ Spin from a number or a string such as '1/2', '1', '3/2' """
        if isinstance(value, Spin):
            return value
        if isinstance(value, str):
            match = _SPIN_RE.match(value)
            if match is None:
                raise ParseError('Invalid spin %r' %(value), token=value)
            num = int(match.group(1))
            den = int(match.group(2)) if match.group(2) else 1
            value = Fraction(num, den)
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise OutOfRange('Spin %s is not a half-integer' %(value))
        return Spin(twice.numerator)

    @property
    def twice(self):
        return int(self)

    @property
    def value(self):
        return Fraction(int(self), 2)

    @property
    def integral(self):
        return int(self) % 2 == 0

    def __str__(self):
        if int(self) % 2 == 0:
            return str(int(self) // 2)
        return '%d/2' %(int(self))

    def __repr__(self):
        return 'Spin(%s)' %(str(self))


class Level(object):
    """ Chern-Simons level k >= 1 together with its root of unity.

    Attributes
    ----------
    k : int
        the level
    q : complex
        exp(2 pi i / (k+2))
    """
    def __init__(self, k):
        k = int(k)
        if k < 1:
            raise OutOfRange('Level must be at least 1, got %d' %(k))
        self.k = k
        self.q = np.exp(2j * np.pi / (k + 2))

    @property
    def max_twice(self):
        """ Largest allowed 2j, i.e. k """
        return self.k

    def check_spin(self, j):
        """ Raises TruncationError when 2j exceeds k """
        if int(j) > self.k:
            raise TruncationError('Spin %s exceeds k/2 at level %d' %(Spin(j), self.k))

    def spins(self):
        """ All allowed spins 0, 1/2, ..., k/2 """
        return [Spin(t) for t in range(self.k + 1)]

    def __eq__(self, other):
        return isinstance(other, Level) and other.k == self.k

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('Level', self.k))

    def __repr__(self):
        return 'Level(%d)' %(self.k)


def as_level(level):
    """ Accepts a Level or a bare integer level """
    if isinstance(level, Level):
        return level
    return Level(level)


def qpower(level, exponent):
    """ q raised to a rational exponent, reduced exactly modulo the period k+2.

    Parameters
    ----------
    level : :obj:`Level`
    exponent : :obj:`fractions.Fraction` or int
    """
    level = as_level(level)
    exponent = Fraction(exponent) % (level.k + 2)
    return np.exp(2j * np.pi * float(exponent) / (level.k + 2))


def root_of_unity(level, half_steps):
    """ q^(half_steps / 2) """
    return qpower(level, Fraction(int(half_steps), 2))


def qint(level, n):
    """ Quantum integer [n] = sin(pi n / (k+2)) / sin(pi / (k+2)) for 0 <= n <= k+2 """
    level = as_level(level)
    n = int(n)
    if n < 0 or n > level.k + 2:
        raise OutOfRange('Quantum integer [%d] outside [0, %d]' %(n, level.k + 2))
    if n == 0 or n == level.k + 2:
        return 0.0
    return float(np.sin(np.pi * n / (level.k + 2)) / np.sin(np.pi / (level.k + 2)))


def qfactorial(level, n):
    """ [n]! = [1][2]...[n], which vanishes once n reaches k+2 """
    level = as_level(level)
    n = int(n)
    if n < 0:
        raise OutOfRange('Quantum factorial of negative %d' %(n))
    if n >= level.k + 2:
        return 0.0
    result = 1.0
    for i in range(1, n + 1):
        result *= qint(level, i)
    return result


def casimir(j):
    """ c_j = j(j+1) as an exact fraction """
    t = int(j)
    return Fraction(t * (t + 2), 4)


def qdim(level, j):
    """ Quantum dimension [2j+1] """
    level = as_level(level)
    if int(j) > level.k:
        raise OutOfRange('Spin %s exceeds k/2 at level %d' %(Spin(j), level.k))
    return qint(level, int(j) + 1)


def qdim_product(level, colors):
    """ Product of quantum dimensions over a sequence of spins """
    result = 1.0
    for j in colors:
        result *= qdim(level, j)
    return result
