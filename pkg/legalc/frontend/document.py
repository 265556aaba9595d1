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

"""Syntax tree and diagnostics."""

from collections import namedtuple


Statement = namedtuple("Statement", "doc_type number")

Article = namedtuple("Article", "number title content")
Article.__doc__ = """An article. ``title`` is ``None`` when the header line
ends at the colon."""

LocDate = namedtuple("LocDate", "location date had_fi_keyword")

Signature = namedtuple("Signature", "variant name position")
Signature.__doc__ = """A signature. ``variant`` is ``"type1"`` (signature
keyword first, then the position) or ``"type2"`` (position first)."""

TYPE1 = "type1"
TYPE2 = "type2"

Document = namedtuple("Document", [
    "statement", "title", "issuer", "references", "justifications",
    "articles", "loc_date", "signatures"])
Document.__doc__ = """A parsed legal document.

``references`` and ``articles`` are never empty, ``justifications`` and
``signatures`` may be.
"""


ERROR = "error"
WARNING = "warning"


class Diagnostic:
    """A parser or scanner finding.

    Attributes:
        severity (str): ``"error"`` aborts code generation,
            ``"warning"`` does not.
        message (str): One line description.
        span (Span): Offending source range.
        expected (frozenset[TokenKind]): Kinds that would have been
            accepted. May be empty.
        found (TokenKind): Kind found at ``span``.
    """
    def __init__(self, message, span, expected=(), found=None,
                 severity=ERROR):
        self.severity = severity
        self.message = message
        self.span = span
        self.expected = frozenset(expected)
        self.found = found

    def __repr__(self):
        return "Diagnostic({}: {!r} at {})".format(
            self.severity, self.message, tuple(self.span))


class ParseError(Exception):
    """Raised when a document is rejected.

    Attributes:
        diagnostics (list[Diagnostic]): At least one error, earliest
            first.
    """
    def __init__(self, diagnostics):
        diagnostics = list(diagnostics)
        super().__init__(diagnostics[0].message)
        self.diagnostics = diagnostics


def dump_ast(doc):
    """Render a :class:`Document` one node per line, indented by depth."""
    out = []

    def emit(depth, name, value=None):
        if value is None:
            out.append("  "*depth + name)
        else:
            out.append("  "*depth + name + " " + value)

    emit(0, "document")
    emit(1, "statement")
    emit(2, "type", doc.statement.doc_type)
    emit(2, "number", doc.statement.number)
    emit(1, "title", doc.title)
    emit(1, "issuer", doc.issuer)
    emit(1, "references")
    for ref in doc.references:
        emit(2, "reference", ref)
    emit(1, "justifications")
    for just in doc.justifications:
        emit(2, "justification", just)
    emit(1, "articles")
    for article in doc.articles:
        emit(2, "article")
        emit(3, "number", article.number)
        emit(3, "title", "-" if article.title is None else article.title)
        emit(3, "content", article.content)
    emit(1, "loc-date")
    emit(2, "location", doc.loc_date.location)
    emit(2, "date", doc.loc_date.date)
    emit(2, "fi", "yes" if doc.loc_date.had_fi_keyword else "no")
    emit(1, "signatures")
    for sig in doc.signatures:
        emit(2, "signature", sig.variant)
        emit(3, "name", sig.name)
        emit(3, "position", sig.position)
    return "".join(line + "\n" for line in out)
