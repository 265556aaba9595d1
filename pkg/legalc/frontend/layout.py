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

"""Line oriented tokenization of the article list and the trailer.

The grammar puts free text next to free text from the article bodies
on (title, content, issue location, date, signature names and positions),
so these parts are delimited by layout instead of by keywords:

    * an article header is a line starting with the article keyword and
      holding a colon; the rest of that line is the title,
    * the lines up to the next header are the content,
    * the first line starting with the signature keyword anchors the
      trailer (see :func:`segment_trailer`).

Free text produced here keeps whole words, delimiters included.
"""

from collections import namedtuple
import logging

from .normalizer import fold_for_matching, has_digit
from .scanner import (TokenKind, Token, Span, ScanState, PUNCTUATION,
                      match_keyword_phrase, scan_number, eof_span)
from .document import Diagnostic, ParseError


logger = logging.getLogger(__name__)


Row = namedtuple("Row", "line start")
Row.__doc__ = """A line, or the tail of one when ``start > 0``."""


def rows_from(state, text):
    """Rows from the scan cursor to the end of the document."""
    state.settle(text)
    if state.line >= len(text.lines):
        return []
    return ([Row(state.line, state.word)] +
            [Row(i, 0) for i in range(state.line + 1, len(text.lines))])


def _words(text, row):
    return text.lines[row.line].words[row.start:]


def _span(row, first, last=None):
    if last is None:
        last = first
    return Span(row.line, row.start + first, row.line, row.start + last)


def _row_end(text, row):
    n = len(text.lines[row.line].words)
    return Span(row.line, n, row.line, n)


def _fail(message, span, expected=(), found=TokenKind.STRING):
    raise ParseError([Diagnostic(message, span, expected, found)])


def _starts_with(text, row, kind):
    return match_keyword_phrase(ScanState(*row), text, {kind}) is not None


def _colon_at(words):
    for j, word in enumerate(words):
        if word.text == ":" or ":" in fold_for_matching(word.text).trailing:
            return j
    return None


def is_header(text, row):
    """Line starting with the article keyword and holding a colon."""
    return (_starts_with(text, row, TokenKind.MADA) and
            _colon_at(_words(text, row)) is not None)


def is_signature_line(text, row):
    """Line whose first word folds to the signature keyword."""
    return _starts_with(text, row, TokenKind.IMDAA)


def matches_loc_date(text, row):
    """Second word is the FI keyword or some word carries a digit."""
    words = _words(text, row)
    if len(words) > 1 and \
            match_keyword_phrase(ScanState(row.line, row.start + 1), text,
                                 {TokenKind.FI}) is not None:
        return True
    return any(has_digit(w.text) for w in words)


def segment_trailer(text, rows):
    """Split the lines after the last article header.

    Let ``f`` be the first signature line. The issue location and date
    is line ``f - 1`` if that line looks like one, else line ``f - 2``
    with line ``f - 1`` being the position of a position-first signature.
    Without signature lines, the last line must be the issue line.

    Args:
        text (NormalizedText): Document.
        rows (list[Row]): Lines from the first content line of the last
            article to the end.

    Returns:
        tuple[int, list[Row]]: Index of the issue line in ``rows`` and the
        signature rows.

    Raises:
        ParseError: No usable issue line.
    """
    f = next((i for i, row in enumerate(rows)
              if is_signature_line(text, row)), None)
    if f is None:
        if rows and matches_loc_date(text, rows[-1]):
            logger.debug("no signature block, issue line %d", rows[-1].line)
            return len(rows) - 1, []
        span = _row_end(text, rows[-1]) if rows else eof_span(text)
        _fail("no signature block and the last line is not an issue "
              "location and date", span, {TokenKind.IMDAA})
    if f >= 1 and matches_loc_date(text, rows[f - 1]):
        loc = f - 1
    elif f >= 2:
        loc = f - 2
    else:
        _fail("expected issue location and date before signatures",
              _span(rows[f], 0), found=TokenKind.IMDAA)
    logger.debug("issue line %d, signatures from line %d",
                 rows[loc].line, rows[loc + 1].line)
    return loc, rows[loc + 1:]


def text_token(text, rows):
    """One free text token covering whole rows."""
    words = [w.text for row in rows for w in _words(text, row)]
    last = rows[-1]
    span = Span(rows[0].line, rows[0].start, last.line,
                len(text.lines[last.line].words) - 1)
    return Token(TokenKind.STRING, " ".join(words), span)


def _delimiters(trailing, span):
    return [Token(PUNCTUATION[c], c, span) for c in trailing]


def _keyword_and_colon(text, row, kind):
    # keyword word, its colon (detached or standalone), index of the rest
    words = _words(text, row)
    first = fold_for_matching(words[0].text)
    tokens = [Token(kind, first.stem, _span(row, 0))]
    if first.trailing:
        tokens += _delimiters(first.trailing, _span(row, 0))
        return tokens, 1
    if len(words) > 1 and words[1].text == ":":
        tokens.append(Token(TokenKind.COLON, ":", _span(row, 1)))
        return tokens, 2
    return tokens, 1


def header_tokens(text, row):
    """Tokens of an article header line: keyword, number, colon and the
    optional title."""
    words = _words(text, row)
    j = _colon_at(words)
    if j is None:
        _fail("missing colon after article number", _row_end(text, row),
              {TokenKind.COLON}, TokenKind.EOF if len(words) == 1 else
              TokenKind.STRING)
    if j == 0 or (j == 1 and words[1].text == ":"):
        _fail("article number is empty", _span(row, j), {TokenKind.NUM},
              TokenKind.COLON)
    first = fold_for_matching(words[0].text)
    tokens = [Token(TokenKind.MADA, first.stem, _span(row, 0))]
    tokens += _delimiters(first.trailing, _span(row, 0))
    standalone = words[j].text == ":"
    last = j - 1 if standalone else j
    number = [fold_for_matching(w.text) for w in words[1:last + 1]]
    pieces = [w.original for w in number[:-1]] + [
        number[-1].original if standalone else number[-1].stem]
    digits = scan_number(number[0]) if len(number) == 1 else None
    if digits is not None and not (standalone and number[0].trailing):
        tokens.append(Token(TokenKind.NUM, digits, _span(row, 1)))
    else:
        tokens.append(Token(TokenKind.STRING, " ".join(pieces),
                            _span(row, 1, last)))
    if standalone:
        tokens.append(Token(TokenKind.COLON, ":", _span(row, j)))
    else:
        tokens += _delimiters(number[-1].trailing, _span(row, j))
    if j + 1 < len(words):
        tokens.append(Token(
            TokenKind.STRING, " ".join(w.text for w in words[j + 1:]),
            _span(row, j + 1, len(words) - 1)))
    return tokens


def loc_date_tokens(text, row):
    """Tokens of the issue line: location, optional FI, date."""
    words = _words(text, row)
    if len(words) < 2:
        _fail("issue location and date line needs at least two words",
              _span(row, 0), found=TokenKind.STRING)
    fi = next((i for i in range(len(words))
               if match_keyword_phrase(ScanState(row.line, row.start + i),
                                       text, {TokenKind.FI}) is not None and
               not fold_for_matching(words[i].text).trailing), None)
    if fi is not None:
        if fi == 0:
            _fail("issue location is empty", _span(row, 0),
                  {TokenKind.STRING}, TokenKind.FI)
        if fi == len(words) - 1:
            _fail("issue date is empty", _row_end(text, row),
                  {TokenKind.STRING}, TokenKind.EOF)
        split, skip = fi, 1
    else:
        split = next((i for i, w in enumerate(words) if has_digit(w.text)),
                     None)
        if split is None:
            _fail("cannot split issue location from date", _span(row, 0),
                  {TokenKind.FI, TokenKind.NUM})
        if split == 0:
            _fail("issue location is empty", _span(row, 0),
                  {TokenKind.STRING}, TokenKind.STRING)
        skip = 0
    tokens = [Token(TokenKind.STRING,
                    " ".join(w.text for w in words[:split]),
                    _span(row, 0, split - 1))]
    if skip:
        tokens.append(Token(TokenKind.FI, words[fi].text, _span(row, fi)))
    tokens.append(Token(TokenKind.STRING,
                        " ".join(w.text for w in words[split + skip:]),
                        _span(row, split + skip, len(words) - 1)))
    return tokens


def signature_line_tokens(text, row):
    """Tokens of a signature line: keyword, colon and the name."""
    words = _words(text, row)
    tokens, rest = _keyword_and_colon(text, row, TokenKind.IMDAA)
    if not any(t.kind is TokenKind.COLON for t in tokens):
        _fail("signature is not followed by a colon",
              _span(row, min(rest, len(words) - 1)), {TokenKind.COLON},
              TokenKind.STRING if rest < len(words) else TokenKind.EOF)
    if rest >= len(words):
        _fail("signature name is empty", _row_end(text, row),
              {TokenKind.STRING}, TokenKind.EOF)
    tokens.append(Token(TokenKind.STRING,
                        " ".join(w.text for w in words[rest:]),
                        _span(row, rest, len(words) - 1)))
    return tokens


def signature_tokens(text, rows):
    """Tokens of the signature block.

    A leading signature line opens a keyword-first signature whose
    position runs until the line before the next signature line. Every
    later signature line closes a position-first signature whose position
    is the lines since the previous group.
    """
    if not rows:
        return []
    anchors = [i for i, row in enumerate(rows)
               if is_signature_line(text, row)]
    tokens = []
    done = 0
    if anchors and anchors[0] == 0:
        end = anchors[1] - 1 if len(anchors) > 1 else len(rows)
        if end <= 1:
            _fail("signature has no position", _row_end(text, rows[0]),
                  {TokenKind.STRING}, TokenKind.IMDAA if len(anchors) > 1
                  else TokenKind.EOF)
        tokens += signature_line_tokens(text, rows[0])
        tokens.append(text_token(text, rows[1:end]))
        anchors = anchors[1:]
        done = end
    for i in anchors:
        if i <= done:
            _fail("signature has no position", _span(rows[i], 0),
                  {TokenKind.STRING}, TokenKind.IMDAA)
        tokens.append(text_token(text, rows[done:i]))
        tokens += signature_line_tokens(text, rows[i])
        done = i + 1
    if done < len(rows):
        _fail("unexpected trailing input", _span(rows[done], 0),
              {TokenKind.EOF})
    return tokens


def tail_tokens(state, text):
    """Tokenize everything after the acknowledgement.

    Args:
        state (ScanState): Scanner position right after the
            acknowledgement colon.
        text (NormalizedText): Document.

    Returns:
        list[Token]: Article list, issue line and signatures, ending with
        ``EOF``.

    Raises:
        ParseError: Layout violations.
    """
    if state.pending:
        token = state.pending[0]
        _fail("unexpected {!r}".format(token.lexeme), token.span,
              {TokenKind.MADA}, token.kind)
    rows = rows_from(state, text)
    if not rows:
        _fail("expected MADA, found EOF", eof_span(text), {TokenKind.MADA},
              TokenKind.EOF)
    if not _starts_with(text, rows[0], TokenKind.MADA):
        _fail("expected MADA, found STRING", _span(rows[0], 0),
              {TokenKind.MADA})
    headers = [0] + [i for i in range(1, len(rows))
                     if is_header(text, rows[i])]
    tokens = []
    for k, h in enumerate(headers):
        tokens += header_tokens(text, rows[h])
        if k + 1 < len(headers):
            body = rows[h + 1:headers[k + 1]]
            if not body:
                _fail("empty article content",
                      _span(rows[headers[k + 1]], 0), {TokenKind.STRING},
                      TokenKind.MADA)
            tokens.append(text_token(text, body))
            continue
        trailer = rows[h + 1:]
        loc, signatures = segment_trailer(text, trailer)
        if loc == 0:
            _fail("empty article content", _span(trailer[0], 0),
                  {TokenKind.STRING}, TokenKind.STRING)
        tokens.append(text_token(text, trailer[:loc]))
        tokens += loc_date_tokens(text, trailer[loc])
        tokens += signature_tokens(text, signatures)
    tokens.append(Token(TokenKind.EOF, "", eof_span(text)))
    return tokens
