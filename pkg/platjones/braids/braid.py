# -*- coding: utf-8 -*-
"""
Colored oriented braids in plat form: data model, text/JSON parser and renderer.
"""
from collections import namedtuple
import json
import logging
import re

from platjones.algebra.qarith import Spin
from platjones.constants import UP, DOWN
from platjones.errors import GeneratorIndexError, OutOfRange, ParseError, PlatError

logger = logging.getLogger(__name__)

_KEY_RE = re.compile(r'(strands|colors|word|orient)\s*=')
_INT_RE = re.compile(r'\S+')

StrandState = namedtuple('StrandState', ['color', 'up'])


class LevelSlice(object):
    """ Colors and orientations of all strands at one horizontal level """
    def __init__(self, strands):
        self.strands = tuple(StrandState(Spin(s.color), bool(s.up)) for s in strands)

    @property
    def colors(self):
        return tuple(s.color for s in self.strands)

    @property
    def orientations(self):
        return tuple(s.up for s in self.strands)

    def __len__(self):
        return len(self.strands)

    def __getitem__(self, i):
        return self.strands[i]

    def swap(self, i):
        """ Slice with the 0-based positions i and i+1 exchanged """
        strands = list(self.strands)
        strands[i], strands[i + 1] = strands[i + 1], strands[i]
        return LevelSlice(strands)

    def parallel(self, i):
        """ Whether the strands at 0-based positions i, i+1 have the same orientation """
        return self.strands[i].up == self.strands[i + 1].up

    def plat_admissible(self):
        """ Cap pairs (2i-1, 2i) carry equal colors and opposite orientations """
        for i in range(0, len(self.strands), 2):
            left, right = self.strands[i], self.strands[i + 1]
            if left.color != right.color or left.up == right.up:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, LevelSlice) and other.strands == self.strands

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.strands)

    def __repr__(self):
        return 'LevelSlice(%s)' %(' '.join('%s%s' %(s.color, UP if s.up else DOWN)
                                            for s in self.strands))


def default_orientation(index):
    """ Strand 2i-1 up, strand 2i down """
    return [i % 2 == 0 for i in range(index)]


class ColoredBraidWord(object):
    """ Braid word on 2m strands together with the bottom colors and orientations.

    Attributes
    ----------
    index : int
        number of strands 2m
    word : :obj:`tuple` of int
        signed generator indices, negative for inverse half twists
    bottom : :obj:`LevelSlice`
        strand states below the first letter
    """
    def __init__(self, index, word, bottom):
        index = int(index)
        if index < 2 or index % 2 != 0:
            raise PlatError('Number of strands must be even and positive, got %d' %(index))
        if not isinstance(bottom, LevelSlice):
            bottom = LevelSlice(bottom)
        if len(bottom) != index:
            raise PlatError('Expected %d strand states, got %d' %(index, len(bottom)))
        word = tuple(int(g) for g in word)
        for g in word:
            if g == 0 or abs(g) > index - 1:
                raise GeneratorIndexError('Generator %d outside [1, %d]' %(g, index - 1),
                                          token=str(g))
        self.index = index
        self.word = word
        self.bottom = bottom
        self._slices = [bottom]
        for g in word:
            self._slices.append(self._slices[-1].swap(abs(g) - 1))

        if not bottom.plat_admissible():
            raise PlatError('Bottom caps do not close: %r' %(bottom))
        if not self.top.plat_admissible():
            raise PlatError('Top caps do not close: %r' %(self.top))

    @property
    def m(self):
        return self.index // 2

    @property
    def top(self):
        return self._slices[-1]

    @property
    def colors(self):
        return self.bottom.colors

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, ColoredBraidWord) and other.index == self.index \
            and other.word == self.word and other.bottom == self.bottom

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.index, self.word, self.bottom))

    def __repr__(self):
        return 'ColoredBraidWord(%s)' %(render(self))

    def to_dict(self):
        return {
            'strands': self.index,
            'colors_twice': [int(c) for c in self.colors],
            'word': list(self.word),
            'orient': ''.join(UP if u else DOWN for u in self.bottom.orientations)
        }


def slice_at(b, position):
    """ Strand states after the first `position` letters of the word """
    if position < 0 or position > len(b.word):
        raise OutOfRange('Position %d outside [0, %d]' %(position, len(b.word)))
    return b._slices[position]


def mirror(b):
    """ Reversed word with every letter inverted, read from the top slice of b """
    word = [-g for g in reversed(b.word)]
    return ColoredBraidWord(b.index, word, b.top)


def render(b):
    """ Canonical text form, accepted back by parse """
    return 'strands=%d colors=%s word=%s orient=%s' %(
        b.index, ','.join(str(c) for c in b.colors),
        ' '.join(str(g) for g in b.word),
        ''.join(UP if u else DOWN for u in b.bottom.orientations))


def _parse_colors(value, offset):
    colors = []
    pos = 0
    for token in value.split(','):
        stripped = token.strip()
        start = offset + pos + (len(token) - len(token.lstrip()))
        pos += len(token) + 1
        if stripped == '':
            raise ParseError('Empty color entry', position=start, token=stripped)
        try:
            colors.append(Spin.from_value(stripped))
        except ParseError:
            raise ParseError('Invalid color %r' %(stripped), position=start, token=stripped)
        except OutOfRange:
            raise ParseError('Color %r is not a half-integer' %(stripped),
                             position=start, token=stripped)
    return colors


def _parse_word(value, offset, index):
    word = []
    for match in _INT_RE.finditer(value):
        token = match.group(0)
        start = offset + match.start()
        try:
            g = int(token)
        except ValueError:
            raise ParseError('Invalid generator %r' %(token), position=start, token=token)
        if g == 0 or (index is not None and abs(g) > index - 1):
            raise GeneratorIndexError('Generator %s outside [1, %d]' %(token, (index or 1) - 1),
                                      position=start, token=token)
        word.append(g)
    return word


def _parse_orient(value, offset):
    stripped = value.strip()
    start = offset + (len(value) - len(value.lstrip()))
    for i, ch in enumerate(stripped):
        if ch not in (UP, DOWN):
            raise ParseError('Orientation must be a string of u/d', position=start + i, token=ch)
    return [ch == UP for ch in stripped]


def _json_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _json_int_list(data, key):
    values = data.get(key, [])
    if not isinstance(values, list) or not all(_json_int(v) for v in values):
        raise ParseError('JSON %s must be a list of integers, got %r' %(key, values))
    return values


def _parse_json(text):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise ParseError('Invalid JSON braid: %s' %(str(e)), position=getattr(e, 'pos', None))
    if not isinstance(data, dict):
        raise ParseError('JSON braid must be an object')
    for key in ['strands', 'colors_twice']:
        if key not in data:
            raise ParseError('JSON braid missing %s' %(key))
    if not _json_int(data['strands']):
        raise ParseError('JSON strands must be an integer, got %r' %(data['strands']))
    index = data['strands']
    colors = [Spin(c) for c in _json_int_list(data, 'colors_twice')]
    word = _json_int_list(data, 'word')
    orient = data.get('orient', None)
    if orient is None:
        ups = default_orientation(index)
    elif not isinstance(orient, str) or any(ch not in (UP, DOWN) for ch in orient):
        raise ParseError('JSON orient must be a string of %s and %s, got %r' %(UP, DOWN, orient))
    else:
        ups = [ch == UP for ch in orient]
    if len(colors) != index or len(ups) != index:
        raise ParseError('Expected %d colors and orientations' %(index))
    for g in word:
        if g == 0 or abs(g) > index - 1:
            raise GeneratorIndexError('Generator %s outside [1, %d]' %(g, index - 1), token=str(g))
    return ColoredBraidWord(index, word, [StrandState(c, u) for c, u in zip(colors, ups)])


def parse(text):
    """ Parses one braid from the key=value grammar or its JSON equivalent.

    Parameters
    ----------
    text : :obj:`str`
        e.g. 'strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2 orient=uddu'

    Returns
    -------
    :obj:`ColoredBraidWord`

    Raises
    ------
    ParseError, GeneratorIndexError, PlatError
    """
    if text.strip().startswith('{'):
        return _parse_json(text)

    matches = list(_KEY_RE.finditer(text))
    if len(matches) == 0:
        raise ParseError('Expected strands=, colors= and word=', position=0, token=text.strip()[:1])
    if text[:matches[0].start()].strip() != '':
        lead = len(text) - len(text.lstrip())
        raise ParseError('Unexpected token before %s' %(matches[0].group(1)),
                         position=lead, token=text.split()[0])

    fields = {}
    for i, match in enumerate(matches):
        key = match.group(1)
        end = matches[i + 1].start() if i + 1 < len(matches) else len(text)
        if key in fields:
            raise ParseError('Duplicate key %s' %(key), position=match.start(), token=key)
        fields[key] = (text[match.end():end], match.end())

    for key in ['strands', 'colors', 'word']:
        if key not in fields:
            raise ParseError('Missing %s=' %(key), position=len(text))

    value, offset = fields['strands']
    try:
        index = int(value.strip())
    except ValueError:
        raise ParseError('Invalid strand count %r' %(value.strip()), position=offset,
                         token=value.strip())
    if index < 2 or index % 2 != 0:
        raise ParseError('Strand count must be even and positive', position=offset,
                         token=value.strip())

    colors = _parse_colors(*fields['colors'])
    if len(colors) != index:
        raise ParseError('Expected %d colors, got %d' %(index, len(colors)),
                         position=fields['colors'][1], token=fields['colors'][0].strip())
    word = _parse_word(fields['word'][0], fields['word'][1], index)
    if 'orient' in fields:
        ups = _parse_orient(*fields['orient'])
        if len(ups) != index:
            raise ParseError('Expected %d orientations' %(index), position=fields['orient'][1],
                             token=fields['orient'][0].strip())
    else:
        ups = default_orientation(index)

    braid = ColoredBraidWord(index, word, [StrandState(c, u) for c, u in zip(colors, ups)])
    logger.debug('Parsed braid %s', render(braid))
    return braid
