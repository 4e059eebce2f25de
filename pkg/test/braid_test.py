from unittest import TestCase

from platjones.algebra.qarith import Spin
from platjones.braids.braid import (ColoredBraidWord, StrandState, mirror, parse, render,
                                    slice_at)
from platjones.errors import GeneratorIndexError, OutOfRange, ParseError, PlatError

TREFOIL = 'strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2 orient=uddu'


class TestBraid(TestCase):

    def test_parse_trefoil(self):
        b = parse(TREFOIL)
        self.assertEqual(b.index, 4)
        self.assertEqual(b.word, (2, 2, 2))
        self.assertEqual(b.colors, (Spin(1),) * 4)
        self.assertEqual(b.bottom.orientations, (True, False, False, True))

    def test_parse_default_orientation(self):
        b = parse('strands=4 colors=1/2,1/2,1,1 word=2 2')
        self.assertEqual(b.bottom.orientations, (True, False, True, False))
        self.assertEqual([int(c) for c in b.colors], [1, 1, 2, 2])

    def test_parse_empty_word(self):
        b = parse('strands=2 colors=1/2,1/2 word=')
        self.assertEqual(b.word, ())
        self.assertEqual(len(b), 0)

    def test_parse_whitespace(self):
        b = parse('  strands = 4\n colors= 1/2, 1/2 ,1/2,1/2\tword = 2  -2 ')
        self.assertEqual(b.word, (2, -2))

    def test_index_error(self):
        text = 'strands=4 colors=1/2,1/2,1/2,1/2 word=2 -5'
        with self.assertRaises(GeneratorIndexError) as ctx:
            parse(text)
        self.assertEqual(ctx.exception.token, '-5')
        self.assertEqual(ctx.exception.position, text.index('-5'))
        self.assertTrue(isinstance(ctx.exception, IndexError))

    def test_syntax_errors(self):
        self.assertRaises(ParseError, parse, 'strands=4 colors=1/2,1/2,1/2 word=')
        self.assertRaises(ParseError, parse, 'strands=3 colors=1/2,1/2,1/2 word=')
        self.assertRaises(ParseError, parse, 'strands=2 colors=j,j word=')
        self.assertRaises(ParseError, parse, 'strands=2 colors=1/2,1/2 word=a')
        self.assertRaises(ParseError, parse, 'strands=2 colors=1/2,1/2')
        self.assertRaises(ParseError, parse, 'braid strands=2 colors=1/2,1/2 word=')
        with self.assertRaises(ParseError) as ctx:
            parse('strands=2 colors=1/2,x word=')
        self.assertEqual(ctx.exception.position, len('strands=2 colors=1/2,'))

    def test_plat_error(self):
        # unequal cap colors
        self.assertRaises(PlatError, parse, 'strands=2 colors=1/2,1 word=')
        # equal orientations in a cap
        self.assertRaises(PlatError, parse, 'strands=2 colors=1/2,1/2 word= orient=uu')
        # the top caps of sigma_2 on udud pair two upward strands
        self.assertRaises(PlatError, parse, 'strands=4 colors=1/2,1/2,1/2,1/2 word=2')

    def test_explicit_orientation_examples(self):
        six = 'strands=6 colors=1/2,1/2,1/2,1/2,1/2,1/2 word=2'
        self.assertRaises(PlatError, parse, six)
        self.assertEqual(parse(six + ' orient=udduud').top.orientations,
                         (True, False, False, True, True, False))
        self.assertEqual(len(parse('strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2 orient=uddu')), 3)

    def test_json(self):
        b = parse('{"strands": 4, "colors_twice": [1, 1, 1, 1], "word": [2, 2, 2], '
                  '"orient": "uddu"}')
        self.assertEqual(b, parse(TREFOIL))
        self.assertEqual(parse(TREFOIL).to_dict()['colors_twice'], [1, 1, 1, 1])

    def test_json_errors(self):
        bad = ['{"strands": 2, "colors_twice": 5}',
               '{"strands": "2", "colors_twice": [1, 1]}',
               '{"strands": 2, "colors_twice": [1, 1], "word": "11"}',
               '{"strands": 2, "colors_twice": [1, 1], "word": [1.5]}',
               '{"strands": 2, "colors_twice": [1, 1], "orient": "ux"}',
               '{"strands": 2, "colors_twice": [1, 1], "orient": ["u", "d"]}',
               '[2, [1, 1]]']
        for text in bad:
            self.assertRaises(ParseError, parse, text)
        self.assertRaises(PlatError, parse, '{"strands": 2, "colors_twice": [1, 1], "orient": "dd"}')

    def test_slice_at(self):
        b = parse(TREFOIL)
        self.assertEqual(slice_at(b, 0), b.bottom)
        s1 = slice_at(b, 1)
        self.assertEqual(s1[1], b.bottom[2])
        self.assertEqual(s1[2], b.bottom[1])
        self.assertTrue(slice_at(b, 3).plat_admissible())
        self.assertRaises(OutOfRange, slice_at, b, 4)
        self.assertRaises(OutOfRange, slice_at, b, -1)

    def test_slice_prefix_consistent(self):
        b = parse('strands=6 colors=1/2,1/2,1,1,1/2,1/2 word=2 3 -1 4 -4 1 -3 -2')
        for n, g in enumerate(b.word):
            self.assertEqual(slice_at(b, n + 1), slice_at(b, n).swap(abs(g) - 1))

    def test_mirror(self):
        b = parse(TREFOIL)
        self.assertEqual(mirror(b).word, (-2, -2, -2))
        self.assertEqual(mirror(mirror(b)), b)
        self.assertEqual(mirror(parse('strands=2 colors=1/2,1/2 word=')).word, ())
        b = parse('strands=4 colors=1/2,1/2,1/2,1/2 word=1 -3')
        self.assertEqual(mirror(b).word, (3, -1))

    def test_round_trip(self):
        for text in [TREFOIL, 'strands=2 colors=1,1 word=1 1 -1',
                     'strands=6 colors=1/2,1/2,1,1,3/2,3/2 word=2 2 -4 -4 1']:
            b = parse(text)
            self.assertEqual(parse(render(b)), b)

    def test_constructor(self):
        bottom = [StrandState(Spin(1), True), StrandState(Spin(1), False)]
        b = ColoredBraidWord(2, [1, -1], bottom)
        self.assertEqual(b.m, 1)
        self.assertRaises(GeneratorIndexError, ColoredBraidWord, 2, [2], bottom)
        self.assertRaises(PlatError, ColoredBraidWord, 3, [], bottom)
