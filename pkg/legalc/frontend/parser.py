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

"""Recursive descent parser.

The front matter (statement up to the acknowledgement) is parsed with
the expectation driven scanner. Everything after it is tokenized by
:mod:`legalc.frontend.layout` and parsed at the token kind level by
:class:`TailParser`. The same parser runs on synthetic token lists
(:class:`TokenList`), which is how it is checked against the grammar
oracle in :mod:`legalc.frontend.grammar`.
"""

import logging

from .scanner import (TokenKind, Token, Span, StopSet, Scanner, ScanError,
                      CANONICAL, KEYWORDS, PUNCTUATION, describe)
from .document import (Statement, Article, LocDate, Signature, Document,
                       Diagnostic, ParseError, TYPE1, TYPE2, WARNING)
from . import layout


logger = logging.getLogger(__name__)


_ORDER = list(TokenKind)

# stops for reference and justification clause text
_CLAUSE_STOPS = StopSet({TokenKind.COMMA, TokenKind.DOT, TokenKind.BINAA,
                         TokenKind.HAYSOU, TokenKind.YAKOUR},
                        line_break_stops=True)


def _names(kinds):
    return ", ".join(k.name for k in sorted(kinds, key=_ORDER.index))


def _start(span):
    return Span(span.start_line, span.start_word,
                span.start_line, span.start_word)


class TextSource:
    """Token source over a normalized document.

    Args:
        text (NormalizedText): Document.
    """
    def __init__(self, text):
        self.text = text
        self.scanner = Scanner(text)

    @property
    def tokens(self):
        """Tokens produced so far."""
        return self.scanner.tokens

    def next_token(self, expected):
        return self.scanner.next_token(expected)

    def at(self, kinds):
        return self.scanner.at(kinds)

    def position(self):
        return self.scanner.position()

    def tail(self):
        tokens = layout.tail_tokens(self.scanner.state, self.text)
        self.scanner.tokens.extend(tokens)
        return tokens


class TokenList:
    """Token source over a prepared token list.

    The stop set is ignored: tokens come back as listed. An ``EOF`` token
    is appended if the list does not end with one.

    Args:
        tokens (iterable[Token]): Tokens.
    """
    def __init__(self, tokens):
        self.tokens = list(tokens)
        if not self.tokens or self.tokens[-1].kind is not TokenKind.EOF:
            n = len(self.tokens)
            self.tokens.append(Token(TokenKind.EOF, "", Span(0, n, 0, n)))
        self.pos = 0

    def next_token(self, expected):
        token = self.tokens[self.pos]
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def at(self, kinds):
        return self.tokens[self.pos].kind in kinds

    def position(self):
        return self.tokens[self.pos].span

    def tail(self):
        tokens = self.tokens[self.pos:]
        self.pos = len(self.tokens) - 1
        return tokens


def _sample_lexeme(kind):
    if kind in CANONICAL:
        return dict(KEYWORDS)[kind][0]
    for char, punct in PUNCTUATION.items():
        if punct is kind:
            return char
    return {TokenKind.NUM: "١", TokenKind.STRING: "نص",
            TokenKind.EOF: ""}[kind]


def synthetic_tokens(kinds):
    """One representative token per kind, spans numbered by position."""
    return [Token(kind, _sample_lexeme(kind), Span(0, i, 0, i))
            for i, kind in enumerate(kinds)]


class Parser:
    """Parser for one document.

    Args:
        source (TextSource or TokenList): Token source.

    Attributes:
        warnings (list[Diagnostic]): Warning diagnostics collected so far.
    """
    def __init__(self, source):
        self.source = source
        self.warnings = []

    def fail(self, kinds, found, span, message=None):
        """Raise :class:`ParseError` for an expectation mismatch."""
        if message is None:
            message = "expected {}, found {}".format(_names(kinds),
                                                     found.name)
        raise ParseError([Diagnostic(message, _start(span), kinds, found)])

    def warn(self, message, span):
        logger.info("warning: %s", message)
        self.warnings.append(Diagnostic(message, span, severity=WARNING))

    def check_spelling(self, token):
        spellings = CANONICAL.get(token.kind)
        if spellings is not None and token.lexeme not in spellings:
            self.warn("{!r} matched {} only after folding, expected {}"
                      .format(token.lexeme, token.kind.name,
                              describe(token.kind)), token.span)

    def expect(self, kinds, stops=None, also=()):
        """Take the next token, which must be of one of ``kinds``.

        Args:
            kinds (set[TokenKind]): Accepted kinds.
            stops (StopSet): Passed to the scanner. Defaults to ``kinds``
                without ``STRING``.
            also (set[TokenKind]): Kinds that would have been acceptable
                before this point. Only reported.

        Returns:
            Token
        """
        kinds = frozenset(kinds)
        if stops is None:
            stops = StopSet(kinds - {TokenKind.STRING})
        try:
            token = self.source.next_token(stops)
        except ScanError as e:
            self.fail(kinds | frozenset(also), e.found, e.span)
        if token.kind not in kinds:
            self.fail(kinds | frozenset(also), token.kind, token.span)
        self.check_spelling(token)
        return token

    def parse(self):
        """Parse the whole document.

        Returns:
            Document

        Raises:
            ParseError: The document is rejected.
        """
        statement = self.parse_statement()
        logger.debug("title")
        title = self.parse_title()
        logger.debug("issuer")
        issuer = self.parse_issuer()
        logger.debug("references")
        references = self.parse_clause_list(TokenKind.BINAA)
        logger.debug("justifications")
        justifications = self.parse_clause_list(TokenKind.HAYSOU)
        also = {TokenKind.HAYSOU}
        if not justifications:
            also.add(TokenKind.BINAA)
        self.parse_acknowledge(also)
        logger.debug("articles")
        tail = TailParser(self.source.tail(), self)
        articles, loc_date, signatures = tail.parse()
        return Document(statement, title, issuer, references,
                        justifications, articles, loc_date, signatures)

    def parse_statement(self):
        """``TYPE RAQM NUM``."""
        logger.debug("statement")
        doc_type = self.expect({TokenKind.TYPE})
        self.expect({TokenKind.RAQM})
        number = self.expect({TokenKind.NUM})
        return Statement(doc_type.lexeme, number.lexeme)

    def parse_title(self):
        if self.source.at({TokenKind.INNA}):
            self.fail({TokenKind.STRING}, TokenKind.INNA,
                      self.source.position())
        return self.expect({TokenKind.STRING},
                           StopSet({TokenKind.INNA}, True)).lexeme

    def parse_issuer(self):
        """``INNA STRING COMMA``."""
        self.expect({TokenKind.INNA})
        issuer = self.expect({TokenKind.STRING},
                             StopSet({TokenKind.COMMA, TokenKind.BINAA},
                                     True))
        self.expect({TokenKind.COMMA})
        return issuer.lexeme

    def parse_clause_list(self, kind):
        """Parse ``kind STRING (COMMA | DOT)`` repeatedly.

        Args:
            kind (TokenKind): ``BINAA`` (at least one clause) or
                ``HAYSOU`` (possibly none).

        Returns:
            list[str]: Clause texts.
        """
        if kind not in (TokenKind.BINAA, TokenKind.HAYSOU):
            raise ValueError("not a clause keyword: {}".format(kind))
        items = []
        while (kind is TokenKind.BINAA and not items) or \
                self.source.at({kind}):
            self.expect({kind})
            items.append(self.expect({TokenKind.STRING},
                                     _CLAUSE_STOPS).lexeme)
            self.expect({TokenKind.COMMA, TokenKind.DOT})
        return items

    def parse_acknowledge(self, also=()):
        """``YAKOUR COLON``."""
        self.expect({TokenKind.YAKOUR}, also=also)
        self.expect({TokenKind.COLON})


class TailParser:
    """Kind level parser for the article list, the issue line and the
    signatures.

    Free text tokens sit next to each other here, so segmentation is
    decided by counting: an article followed by another one has one or
    two text tokens (title and content) before the next ``MADA``. For the
    last article, the signature block starts at the first ``IMDAA``, or
    one token before it for a position-first signature, chosen so the
    block length is a multiple of four. The issue line sits just before
    it, with the ``FI`` keyword if present.

    Args:
        tokens (list[Token]): Tokens ending with ``EOF``.
        parser (Parser): Owner, for diagnostics and warnings.
    """
    def __init__(self, tokens, parser):
        self.tokens = tokens
        self.parser = parser
        self.pos = 0

    def peek(self, offset=0):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def expect(self, kinds, message=None):
        token = self.peek()
        if token.kind not in kinds:
            self.parser.fail(frozenset(kinds), token.kind, token.span,
                             message)
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        self.parser.check_spelling(token)
        return token

    def parse(self):
        articles = [self.parse_article()]
        while self.peek().kind is TokenKind.MADA:
            articles.append(self.parse_article())
        logger.debug("%d articles", len(articles))
        loc_date = self.parse_loc_date()
        signatures = self.parse_sig_list()
        self.expect({TokenKind.EOF}, "unexpected trailing input")
        return articles, loc_date, signatures

    def _strings(self):
        k = 0
        while self.peek(k).kind is TokenKind.STRING:
            k += 1
        return k

    def _last_body(self):
        # text tokens of the last article: title and content
        rest = [t.kind for t in self.tokens[self.pos:-1]]
        if TokenKind.IMDAA in rest:
            f = rest.index(TokenKind.IMDAA)
            head = f if (len(rest) - f) % 4 == 0 else max(f - 1, 0)
        else:
            head = len(rest)
        if TokenKind.FI in rest[:head]:
            return rest.index(TokenKind.FI) - 1
        return head - 2

    def parse_article(self):
        """``MADA (NUM | STRING) COLON [STRING] STRING``.

        Returns:
            Article
        """
        self.expect({TokenKind.MADA})
        number = self.expect({TokenKind.NUM, TokenKind.STRING})
        self.expect({TokenKind.COLON})
        k = self._strings()
        if self.peek(k).kind is TokenKind.MADA:
            body = k
        else:
            body = self._last_body()
        if body < 1:
            token = self.peek()
            self.parser.fail({TokenKind.STRING}, token.kind, token.span,
                             "empty article content")
        title = None
        if body >= 2:
            title = self.expect({TokenKind.STRING}).lexeme
        content = self.expect({TokenKind.STRING}).lexeme
        return Article(number.lexeme, title, content)

    def parse_loc_date(self):
        """``STRING [FI] STRING``.

        Returns:
            LocDate
        """
        location = self.expect({TokenKind.STRING})
        had_fi = self.peek().kind is TokenKind.FI
        if had_fi:
            self.expect({TokenKind.FI})
            date = self.expect({TokenKind.STRING})
        else:
            date = self.expect({TokenKind.STRING, TokenKind.FI})
        return LocDate(location.lexeme, date.lexeme, had_fi)

    def parse_sig_list(self):
        """An optional keyword-first signature, then any number of
        position-first ones.

        Returns:
            list[Signature]
        """
        signatures = []
        if self.peek().kind is TokenKind.IMDAA:
            first = self.expect({TokenKind.IMDAA})
            self.expect({TokenKind.COLON})
            name = self.expect({TokenKind.STRING})
            position = self.expect({TokenKind.STRING})
            signatures.append(Signature(TYPE1, name.lexeme,
                                        position.lexeme))
        while self.peek().kind is TokenKind.STRING:
            position = self.expect({TokenKind.STRING})
            self.expect({TokenKind.IMDAA})
            self.expect({TokenKind.COLON})
            name = self.expect({TokenKind.STRING})
            signatures.append(Signature(TYPE2, name.lexeme,
                                        position.lexeme))
        if signatures and signatures[0].variant == TYPE1 and \
                len(signatures) > 1:
            self.parser.warn("signature block mixes keyword-first and "
                             "position-first signatures", first.span)
        return signatures


def parse_document(text):
    """Parse a normalized document.

    Args:
        text (NormalizedText): Document.

    Returns:
        Document

    Raises:
        ParseError: The document is rejected.
    """
    return Parser(TextSource(text)).parse()


def parse_tokens(tokens):
    """Parse a token list. See :func:`parse_document`."""
    return Parser(TokenList(tokens)).parse()


def accepts(kinds):
    """Whether the parser accepts a token kind sequence."""
    try:
        parse_tokens(synthetic_tokens(kinds))
    except ParseError:
        return False
    return True


def _line_parser(tokens):
    parser = Parser(TokenList([]))
    return TailParser(list(tokens) + [Token(TokenKind.EOF, "",
                                            tokens[-1].span)], parser)


def parse_loc_date(text, row):
    """Parse one issue location and date line.

    Args:
        text (NormalizedText): Document.
        row (layout.Row): The line.

    Returns:
        LocDate
    """
    tail = _line_parser(layout.loc_date_tokens(text, row))
    loc_date = tail.parse_loc_date()
    tail.expect({TokenKind.EOF}, "unexpected trailing input")
    return loc_date


def parse_sig_list(text, rows):
    """Parse signature lines.

    Args:
        text (NormalizedText): Document.
        rows (list[layout.Row]): Signature lines, possibly none.

    Returns:
        list[Signature]
    """
    tokens = layout.signature_tokens(text, rows)
    if not tokens:
        return []
    tail = _line_parser(tokens)
    signatures = tail.parse_sig_list()
    tail.expect({TokenKind.EOF}, "unexpected trailing input")
    return signatures
