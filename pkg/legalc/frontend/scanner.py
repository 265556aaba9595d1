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

"""Expectation driven scanner.

The ``letter`` class of the source language contains digits and the
delimiters "،", "." and ":", so a word sequence cannot be split into
keywords, numbers and free text without knowing what the parser is
looking for. Every :func:`next_token` call therefore takes a
:class:`StopSet`. Keywords outside it are ordinary text.
"""

from collections import deque, namedtuple
from enum import Enum
import logging

from .normalizer import fold_for_matching, DIGITS, DELIMITERS


logger = logging.getLogger(__name__)


class TokenKind(Enum):
    TYPE = "TYPE"
    RAQM = "RAQM"
    NUM = "NUM"
    STRING = "STRING"
    INNA = "INNA"
    BINAA = "BINAA"
    HAYSOU = "HAYSOU"
    YAKOUR = "YAKOUR"
    MADA = "MADA"
    FI = "FI"
    IMDAA = "IMDAA"
    COMMA = "COMMA"
    DOT = "DOT"
    COLON = "COLON"
    EOF = "EOF"


PUNCTUATION = {
    "،": TokenKind.COMMA,
    ".": TokenKind.DOT,
    ":": TokenKind.COLON,
}

# canonical spellings, longest phrases first within each kind
KEYWORDS = [
    (TokenKind.TYPE, ["قانون", "قرار", "مرسوم"]),
    (TokenKind.RAQM, ["رقم"]),
    (TokenKind.INNA, ["إن"]),
    (TokenKind.BINAA, ["وبعد الاطلاع", "وبعد موافقة", "وبناء على",
                       "بناء على", "ونظرا"]),
    (TokenKind.HAYSOU, ["وبعد أن", "وبما أن", "وحيث أن", "نظرا"]),
    (TokenKind.YAKOUR, ["يرسم ما يأتي", "يرسم ما يلي", "يقرر ما يأتي",
                        "يقرر ما يلي"]),
    (TokenKind.MADA, ["مادة", "المادة"]),
    (TokenKind.FI, ["في"]),
    (TokenKind.IMDAA, ["إمضاء", "الإمضاء"]),
]

CANONICAL = {kind: frozenset(spellings) for kind, spellings in KEYWORDS}


def _phrase_table():
    table = {}
    for kind, spellings in KEYWORDS:
        for spelling in spellings:
            key = tuple(fold_for_matching(w).folded
                        for w in spelling.split())
            assert table.setdefault(key, kind) is kind, spelling
    return table


_PHRASES = _phrase_table()
_LONGEST = max(len(key) for key in _PHRASES)


Span = namedtuple("Span", "start_line start_word end_line end_word")
Span.__doc__ = """Inclusive word range. Lines index
:attr:`NormalizedText.lines`; ``start_word == len(words)`` marks the
position after the last word of a line."""

Token = namedtuple("Token", "kind lexeme span")


class ScanError(Exception):
    """Base class for scanner errors.

    Attributes:
        span (Span): Offending position.
        found (TokenKind): What blocked the scan at that position.
    """
    def __init__(self, message, span, found):
        super().__init__(message)
        self.message = message
        self.span = span
        self.found = found


class EmptyString(ScanError):
    """Raised when text was required but no word could be taken."""


class StopSet:
    """Token kinds the parser can accept next.

    Args:
        kinds (iterable[TokenKind]): Keyword, number and delimiter kinds
            that end free text. ``STRING`` is implied and not allowed
            here.
        line_break_stops (bool): Keywords in ``kinds`` end free text only
            when they start a line. Otherwise they end it anywhere.
    """
    def __init__(self, kinds=(), line_break_stops=False):
        self.kinds = frozenset(kinds)
        if TokenKind.STRING in self.kinds:
            raise ValueError("STRING can not be a stop kind")
        self.line_break_stops = line_break_stops

    def __contains__(self, kind):
        return kind in self.kinds

    def __repr__(self):
        return "StopSet({}, line_break_stops={})".format(
            sorted(k.name for k in self.kinds), self.line_break_stops)


class ScanState:
    """Cursor into a :class:`NormalizedText` plus detached punctuation
    that still has to be emitted.

    Attributes:
        line (int): Line index.
        word (int): Word index within the line.
        pending (deque[Token]): Detached delimiter tokens.
    """
    def __init__(self, line=0, word=0):
        self.line = line
        self.word = word
        self.pending = deque()

    @property
    def cursor(self):
        return self.line, self.word

    def copy(self):
        state = ScanState(self.line, self.word)
        state.pending.extend(self.pending)
        return state

    def settle(self, text):
        """Move past line ends."""
        lines = text.lines
        while self.line < len(lines) and \
                self.word >= len(lines[self.line].words):
            self.line += 1
            self.word = 0

    def at_end(self, text):
        self.settle(text)
        return self.line >= len(text.lines)

    def advance(self, text, n=1):
        self.word += n
        self.settle(text)


def eof_span(text):
    if not text.lines:
        return Span(0, 0, 0, 0)
    last = len(text.lines) - 1
    n = len(text.lines[last].words)
    return Span(last, n, last, n)


def match_keyword_phrase(state, text, kinds=None):
    """Longest keyword phrase starting at the cursor.

    Phrases stay on one line. Only the last word of a phrase may carry
    trailing delimiters.

    Args:
        state (ScanState): Scan position.
        text (NormalizedText): Document.
        kinds (set[TokenKind]): Restrict matches to these kinds. All
            kinds if ``None``.

    Returns:
        tuple[TokenKind, int] or None: Kind and word count.
    """
    if state.at_end(text):
        return None
    words = text.lines[state.line].words[state.word:]
    folded = []
    for word in words[:_LONGEST]:
        f = fold_for_matching(word.text)
        folded.append(f.folded)
        if f.trailing:
            break
    for n in range(len(folded), 0, -1):
        kind = _PHRASES.get(tuple(folded[:n]))
        if kind is not None and (kinds is None or kind in kinds):
            return kind, n
    return None


def scan_number(word):
    """Number automaton: a run of at least one ASCII or Arabic-Indic
    digit.

    Args:
        word (FoldedWord): Candidate, trailing delimiters detached.

    Returns:
        str or None: The digits as written.
    """
    digits = word.stem
    if digits and all(c in DIGITS for c in digits):
        return digits
    return None


def standalone_delimiter(word):
    """Kind of a word that is a single delimiter character, else
    ``None``."""
    return PUNCTUATION.get(word) if len(word) == 1 else None


def _detach(state, trailing, span):
    for c in trailing:
        state.pending.append(Token(PUNCTUATION[c], c, span))


def _ends_text(word, last_in_line, expected):
    trailing = word.trailing
    return ("،" in trailing or
            (last_in_line and trailing.endswith(".")) or
            (":" in trailing and TokenKind.COLON in expected))


def next_token(state, text, expected):
    """Scan the next token.

    In order: pending detached punctuation, a standalone delimiter word,
    the longest keyword phrase of an expected kind, a number if ``NUM`` is
    expected, otherwise free text up to the first stop.

    Args:
        state (ScanState): Scan position, advanced in place.
        text (NormalizedText): Document.
        expected (StopSet): What the parser can accept.

    Returns:
        Token

    Raises:
        EmptyString: Pending punctuation is not expected or a stop sits at
            the cursor, so no text can be taken.
    """
    if state.pending:
        token = state.pending[0]
        if token.kind not in expected:
            raise EmptyString("unexpected {!r}".format(token.lexeme),
                              token.span, token.kind)
        return state.pending.popleft()
    if state.at_end(text):
        return Token(TokenKind.EOF, "", eof_span(text))

    line, w = state.cursor
    words = text.lines[line].words
    here = Span(line, w, line, w)

    kind = standalone_delimiter(words[w].text)
    if kind is not None and kind in expected:
        state.advance(text)
        return Token(kind, words[w].text, here)

    match = match_keyword_phrase(state, text, expected.kinds)
    if match is not None:
        kind, n = match
        folded = [fold_for_matching(word.text) for word in words[w:w + n]]
        span = Span(line, w, line, w + n - 1)
        lexeme = " ".join(f.stem for f in folded)
        state.advance(text, n)
        _detach(state, folded[-1].trailing, span)
        return Token(kind, lexeme, span)

    if TokenKind.NUM in expected:
        folded = fold_for_matching(words[w].text)
        digits = scan_number(folded)
        if digits is not None:
            state.advance(text)
            _detach(state, folded.trailing, here)
            return Token(TokenKind.NUM, digits, here)

    return _scan_string(state, text, expected)


def _scan_string(state, text, expected):
    pieces = []
    start = state.cursor
    end = start
    trailing = ""
    while not state.at_end(text):
        line, w = state.cursor
        words = text.lines[line].words
        if pieces:
            if (not expected.line_break_stops or w == 0) and \
                    match_keyword_phrase(state, text, expected.kinds):
                break
        last_in_line = w == len(words) - 1
        kind = standalone_delimiter(words[w].text)
        if kind is TokenKind.COMMA or \
                (kind is TokenKind.DOT and last_in_line) or \
                (kind is TokenKind.COLON and kind in expected):
            if not pieces:
                break
            state.advance(text)
            _detach(state, words[w].text, Span(line, w, line, w))
            return _string_token(pieces, start, end)
        word = fold_for_matching(words[w].text)
        end = line, w
        state.advance(text)
        if word.trailing and _ends_text(word, last_in_line, expected):
            pieces.append(word.stem)
            trailing = word.trailing
            break
        pieces.append(word.original)
    if not pieces:
        if state.at_end(text):
            span, found = eof_span(text), TokenKind.EOF
        else:
            line, w = state.cursor
            span = Span(line, w, line, w)
            found = (standalone_delimiter(text.lines[line].words[w].text) or
                     TokenKind.STRING)
        raise EmptyString("no text before stop", span, found)
    token = _string_token(pieces, start, end)
    _detach(state, trailing, Span(end[0], end[1], end[0], end[1]))
    return token


def _string_token(pieces, start, end):
    return Token(TokenKind.STRING, " ".join(pieces),
                 Span(start[0], start[1], end[0], end[1]))


class Scanner:
    """Scanner over one document.

    Records every emitted token for :func:`dump_tokens` and the
    reconstruction check.

    Args:
        text (NormalizedText): Document to scan.
    """
    def __init__(self, text):
        self.text = text
        self.state = ScanState()
        self.tokens = []

    def next_token(self, expected):
        token = next_token(self.state, self.text, expected)
        logger.debug("%s %r", token.kind.name, token.lexeme)
        self.tokens.append(token)
        return token

    def at(self, kinds):
        """Whether a keyword phrase of one of ``kinds`` is next."""
        if self.state.pending:
            return self.state.pending[0].kind in kinds
        return match_keyword_phrase(self.state, self.text, kinds) is not None

    def position(self):
        """Span of the next unconsumed position."""
        if self.state.pending:
            return self.state.pending[0].span
        if self.state.at_end(self.text):
            return eof_span(self.text)
        line, w = self.state.cursor
        return Span(line, w, line, w)


def describe(kind):
    """Human readable spelling of a token kind for diagnostics."""
    if kind in CANONICAL:
        return " | ".join(dict(KEYWORDS)[kind])
    for char, punct in PUNCTUATION.items():
        if punct is kind:
            return char
    return {
        TokenKind.NUM: "<number>",
        TokenKind.STRING: "<text>",
        TokenKind.EOF: "<end of input>",
    }[kind]


def format_span(span, text):
    """``L:W-L:W`` with source line numbers and 1-based word indices."""
    def number(line):
        if not text.lines:
            return 1
        return text.lines[line].number
    return "{}:{}-{}:{}".format(
        number(span.start_line), span.start_word + 1,
        number(span.end_line), span.end_word + 1)


def dump_tokens(tokens, text):
    """Render tokens one per line as ``KIND<TAB>span<TAB>lexeme``."""
    return "".join("{}\t{}\t{}\n".format(
        t.kind.name, format_span(t.span, text), t.lexeme) for t in tokens)
