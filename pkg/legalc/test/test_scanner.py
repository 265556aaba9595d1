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

import os
import unittest

from ..frontend.normalizer import preprocess, fold_for_matching, FoldedWord
from ..frontend.scanner import (
    TokenKind, StopSet, ScanState, Scanner, EmptyString, next_token,
    match_keyword_phrase, scan_number, describe, dump_tokens)
from ..frontend.parser import Parser, TextSource


CORPUS = os.path.join(os.path.dirname(__file__), "corpus")

T = TokenKind


def load(source):
    return preprocess(source.encode("utf-8"))


class TestKeywords(unittest.TestCase):
    def match(self, source, kinds=None):
        return match_keyword_phrase(ScanState(), load(source), kinds)

    def test_acknowledge(self):
        self.assertEqual(self.match("يرسم ما يأتي:"), (T.YAKOUR, 3))

    def test_reference(self):
        self.assertEqual(self.match("بناء على الدستور لا سيما"),
                         (T.BINAA, 2))
        self.assertEqual(self.match("وبناء على الدستور"), (T.BINAA, 2))

    def test_none(self):
        self.assertIsNone(self.match("دعوة"))
        self.assertIsNone(self.match(""))

    def test_restricted(self):
        self.assertIsNone(self.match("مرسوم رقم", {T.RAQM}))
        self.assertEqual(self.match("مرسوم رقم", {T.TYPE}), (T.TYPE, 1))

    def test_folded(self):
        self.assertEqual(self.match("الامضاء: ميشال"), (T.IMDAA, 1))
        self.assertEqual(self.match("المادة ١"), (T.MADA, 1))

    def test_phrase_stops_at_trailing(self):
        # a delimiter inside a phrase breaks it
        self.assertIsNone(self.match("يرسم، ما يأتي"))

    def test_single_line(self):
        self.assertIsNone(self.match("بناء\nعلى"))


class TestNumber(unittest.TestCase):
    def test_number(self):
        self.assertEqual(scan_number(fold_for_matching("٢٥")), "٢٥")
        self.assertEqual(scan_number(fold_for_matching("١:")), "١")
        self.assertEqual(scan_number(fold_for_matching("7")), "7")

    def test_not_number(self):
        self.assertIsNone(scan_number(FoldedWord("", "", "", "")))
        self.assertIsNone(scan_number(fold_for_matching("٢٠١٨/٣/١٩")))
        self.assertIsNone(scan_number(fold_for_matching("رقم")))


class TestNextToken(unittest.TestCase):
    def scan(self, source, *stops):
        text = load(source)
        state = ScanState()
        return [next_token(state, text, s) for s in stops]

    def test_eof(self):
        token, = self.scan("", StopSet({T.EOF}))
        self.assertIs(token.kind, T.EOF)

    def test_statement(self):
        tokens = self.scan("مرسوم رقم ٢٥", StopSet({T.TYPE}),
                           StopSet({T.RAQM}), StopSet({T.NUM}),
                           StopSet())
        self.assertEqual([t.kind for t in tokens],
                         [T.TYPE, T.RAQM, T.NUM, T.EOF])
        self.assertEqual(tokens[2].lexeme, "٢٥")

    def test_unexpected_keyword_is_text(self):
        token, = self.scan(
            "ينشر هذا المرسوم ويبلغ حيث تدعو الحاجة",
            StopSet({T.MADA, T.FI}, line_break_stops=True))
        self.assertIs(token.kind, T.STRING)
        self.assertEqual(token.lexeme,
                         "ينشر هذا المرسوم ويبلغ حيث تدعو الحاجة")

    def test_keyword_stop(self):
        text, raqm = self.scan("مرسوم رقم", StopSet({T.RAQM}),
                               StopSet({T.RAQM}))
        self.assertEqual((text.kind, text.lexeme), (T.STRING, "مرسوم"))
        self.assertIs(raqm.kind, T.RAQM)

    def test_line_break_stops(self):
        source = "دعوة إن\nإن رئيس"
        title, inna = self.scan(source, StopSet({T.INNA}, True),
                                StopSet({T.INNA}))
        self.assertEqual(title.lexeme, "دعوة إن")
        self.assertIs(inna.kind, T.INNA)

    def test_detached_comma(self):
        text, comma = self.scan("رئيس الجمهورية،", StopSet({T.COMMA}),
                                StopSet({T.COMMA}))
        self.assertEqual(text.lexeme, "رئيس الجمهورية")
        self.assertEqual((comma.kind, comma.lexeme), (T.COMMA, "،"))
        self.assertEqual(comma.span, text.span[2:] * 2)

    def test_line_final_dot(self):
        text, dot = self.scan("اقتراح الوزير.\nيرسم",
                              StopSet({T.COMMA, T.DOT}),
                              StopSet({T.COMMA, T.DOT}))
        self.assertEqual(text.lexeme, "اقتراح الوزير")
        self.assertIs(dot.kind, T.DOT)

    def test_inner_dot_is_text(self):
        token, = self.scan("م.ع. الوزير،", StopSet({T.COMMA}))
        self.assertEqual(token.lexeme, "م.ع. الوزير")

    def test_colon_only_when_expected(self):
        token, = self.scan("بما يلي: نص،", StopSet({T.COMMA}))
        self.assertEqual(token.lexeme, "بما يلي: نص")

    def test_pending_not_expected(self):
        text = load("رئيس الجمهورية،")
        state = ScanState()
        next_token(state, text, StopSet({T.COMMA}))
        with self.assertRaises(EmptyString) as cm:
            next_token(state, text, StopSet({T.DOT}))
        self.assertIs(cm.exception.found, T.COMMA)

    def test_standalone_delimiters(self):
        tokens = self.scan("مادة ١ : عنوان", StopSet({T.MADA}),
                           StopSet({T.NUM}), StopSet({T.COLON}),
                           StopSet())
        self.assertEqual([t.kind for t in tokens],
                         [T.MADA, T.NUM, T.COLON, T.STRING])

    def test_empty_string(self):
        text = load("، نص")
        with self.assertRaises(EmptyString) as cm:
            next_token(ScanState(), text, StopSet())
        self.assertIs(cm.exception.found, T.COMMA)

    def test_stopset(self):
        with self.assertRaises(ValueError):
            StopSet({T.STRING})
        self.assertIn(T.COMMA, StopSet({T.COMMA}))


class TestScanner(unittest.TestCase):
    def test_at(self):
        scanner = Scanner(load("بناء على الدستور"))
        self.assertTrue(scanner.at({T.BINAA}))
        self.assertFalse(scanner.at({T.HAYSOU}))
        scanner.next_token(StopSet({T.BINAA}))
        self.assertEqual(len(scanner.tokens), 1)

    def test_describe(self):
        self.assertEqual(describe(T.RAQM), "رقم")
        self.assertEqual(describe(T.COMMA), "،")
        self.assertEqual(describe(T.EOF), "<end of input>")
        self.assertIn("مرسوم", describe(T.TYPE))

    def test_dump(self):
        text = load("مرسوم رقم ٢٥")
        scanner = Scanner(text)
        scanner.next_token(StopSet({T.TYPE}))
        self.assertEqual(dump_tokens(scanner.tokens, text),
                         "TYPE\t1:1-1:1\tمرسوم\n")


class TestReconstruction(unittest.TestCase):
    def check(self, name):
        with open(os.path.join(CORPUS, name), "rb") as f:
            text = preprocess(f.read(), name)
        source = TextSource(text)
        Parser(source).parse()
        tokens = [t for t in source.tokens if t.kind is not T.EOF]
        joined = "".join(t.lexeme for t in tokens).replace(" ", "")
        self.assertEqual(joined, "".join(text.words()))
        starts = [t.span[:2] for t in tokens]
        self.assertEqual(starts, sorted(starts))

    def test_decree(self):
        self.check("decree-25.txt")

    def test_law(self):
        self.check("law-7.txt")
