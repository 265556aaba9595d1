# Copyright 2019-2026 The legalc authors
#
# This file is part of legalc.
#
# legalc is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# legalc is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with legalc.  If not, see <http://www.gnu.org/licenses/>.

import itertools
import os
import unittest

import numpy as np

from ..frontend.normalizer import preprocess
from ..frontend.scanner import TokenKind
from ..frontend.document import ParseError
from ..frontend.parser import (
    Parser, TextSource, TokenList, TailParser, synthetic_tokens, accepts)
from ..frontend.grammar import (
    GRAMMAR, STRICT_GRAMMAR, LengthBound, oracle_accepts, min_length,
    nullable, to_cnf, random_sentence)


CORPUS = os.path.join(os.path.dirname(__file__), "corpus")

T = TokenKind

KINDS = [k for k in TokenKind if k is not T.EOF]

MINIMAL = [T.TYPE, T.RAQM, T.NUM, T.STRING, T.INNA, T.STRING, T.COMMA,
           T.BINAA, T.STRING, T.COMMA, T.YAKOUR, T.COLON,
           T.MADA, T.NUM, T.COLON, T.STRING, T.STRING, T.FI, T.STRING]

# article list, issue line and signatures on their own
TAIL_GRAMMAR = dict(GRAMMAR)
TAIL_GRAMMAR["tail"] = [("article-list", "loc-date", "sig-list")]

TAIL_KINDS = [T.MADA, T.NUM, T.STRING, T.COLON, T.FI, T.IMDAA]


def decree_kinds():
    with open(os.path.join(CORPUS, "decree-25.txt"), "rb") as f:
        source = TextSource(preprocess(f.read()))
    Parser(source).parse()
    return [t.kind for t in source.tokens if t.kind is not T.EOF]


def tail_accepts(kinds):
    source = TokenList(synthetic_tokens(kinds))
    try:
        TailParser(source.tokens, Parser(source)).parse()
    except ParseError:
        return False
    return True


def mutate(kinds, rs):
    kinds = list(kinds)
    op = rs.randint(3) if kinds else 2
    if op == 0:
        kinds[rs.randint(len(kinds))] = KINDS[rs.randint(len(KINDS))]
    elif op == 1:
        del kinds[rs.randint(len(kinds))]
    else:
        kinds.insert(rs.randint(len(kinds) + 1), KINDS[rs.randint(len(KINDS))])
    return kinds


class TestOracle(unittest.TestCase):
    def test_minimal(self):
        self.assertTrue(oracle_accepts(MINIMAL))

    def test_reject(self):
        self.assertFalse(oracle_accepts([T.RAQM]))
        self.assertFalse(oracle_accepts([]))
        self.assertFalse(oracle_accepts(MINIMAL[1:]))

    def test_start(self):
        self.assertTrue(oracle_accepts([T.TYPE, T.RAQM, T.NUM],
                                       start="statement"))
        self.assertTrue(oracle_accepts([], start="just-list"))
        self.assertTrue(oracle_accepts([], start="sig-list"))
        self.assertTrue(oracle_accepts(
            [T.IMDAA, T.COLON, T.STRING, T.STRING, T.STRING, T.IMDAA,
             T.COLON, T.STRING], start="sig-list"))

    def test_bound(self):
        with self.assertRaises(LengthBound):
            oracle_accepts([T.STRING]*33)
        with self.assertRaises(ValueError):
            oracle_accepts(MINIMAL, bound=16)
        self.assertFalse(oracle_accepts([T.STRING]*33, bound=40))

    def test_min_length(self):
        self.assertEqual(min_length("document"), 18)
        self.assertEqual(min_length("statement"), 3)
        self.assertEqual(min_length("just-list"), 0)
        self.assertEqual(min_length("document"), len(MINIMAL) - 1)

    def test_shortest(self):
        shortest = [k for k in MINIMAL if k is not T.FI]
        self.assertEqual(len(shortest), min_length("document"))
        self.assertTrue(oracle_accepts(shortest))
        self.assertTrue(accepts(shortest))
        for i in range(len(shortest)):
            self.assertFalse(oracle_accepts(shortest[:i] + shortest[i + 1:]))

    def test_nullable(self):
        self.assertEqual(nullable(GRAMMAR), {
            "just-list", "article-title", "sig-type1", "sig-list"})

    def test_cnf(self):
        terminal_rules, binary_rules = to_cnf(GRAMMAR)
        self.assertIn("statement/<RAQM>+<NUM>", binary_rules)
        self.assertIn("<TYPE>", terminal_rules[T.TYPE])
        for pairs in binary_rules.values():
            for pair in pairs:
                self.assertEqual(len(pair), 2)


class TestStrict(unittest.TestCase):
    def test_decree(self):
        kinds = decree_kinds()
        self.assertTrue(oracle_accepts(kinds, bound=64))
        self.assertFalse(oracle_accepts(kinds, bound=64,
                                        grammar=STRICT_GRAMMAR))

    def test_contained(self):
        rs = np.random.RandomState(3)
        for i in range(200):
            kinds = random_sentence(rs, grammar=STRICT_GRAMMAR)
            self.assertTrue(oracle_accepts(kinds, bound=len(kinds),
                                           grammar=STRICT_GRAMMAR))
            self.assertTrue(oracle_accepts(kinds, bound=len(kinds)))
            self.assertTrue(accepts(kinds))


class TestEquivalence(unittest.TestCase):
    def test_short(self):
        for n in range(5):
            for kinds in itertools.product(KINDS, repeat=n):
                self.assertEqual(accepts(kinds), oracle_accepts(kinds),
                                 kinds)

    def test_tail(self):
        for n in range(7):
            for kinds in itertools.product(TAIL_KINDS, repeat=n):
                self.assertEqual(
                    tail_accepts(kinds),
                    oracle_accepts(kinds, start="tail",
                                   grammar=TAIL_GRAMMAR),
                    kinds)

    def test_decree_mutations(self):
        kinds = decree_kinds()
        variants = []
        for i in range(len(kinds)):
            variants.append(kinds[:i] + kinds[i + 1:])
            for k in KINDS:
                variants.append(kinds[:i] + [k] + kinds[i + 1:])
        for i in range(len(kinds) + 1):
            for k in KINDS:
                variants.append(kinds[:i] + [k] + kinds[i:])
        for variant in variants:
            self.assertEqual(accepts(variant),
                             oracle_accepts(variant, bound=64), variant)

    def test_random(self):
        rs = np.random.RandomState(0)
        shortest = min_length("document")
        checked = accepted = 0
        while checked < 10000:
            kinds = random_sentence(rs)
            if len(kinds) > 30:
                continue
            for variant in (kinds, mutate(kinds, rs),
                            mutate(mutate(kinds, rs), rs),
                            mutate(kinds, rs)):
                expect = oracle_accepts(variant)
                if len(variant) < shortest:
                    self.assertFalse(expect, variant)
                self.assertEqual(accepts(variant), expect, variant)
                accepted += expect
                checked += 1
        self.assertGreater(accepted, 2500)
