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

"""Syntax directed translation of a :class:`Document` into an element
tree.

Every grammar symbol contributes an opening frame, its content and a
closing frame. The acknowledgement contributes nothing.
"""

import logging

from ..frontend.normalizer import to_western_digits, DIGITS
from ..frontend.document import TYPE1


logger = logging.getLogger(__name__)


class ElementFrame:
    """An element: tag plus ordered content.

    Args:
        tag (str): Element name.
        content (list): Child :class:`ElementFrame` objects, or a single
            ``str`` for a text element. Empty for an empty element.
    """
    def __init__(self, tag, content=()):
        self.tag = tag
        if isinstance(content, str):
            self.content = content
        else:
            self.content = list(content)

    @property
    def open(self):
        return "<{}>".format(self.tag)

    @property
    def close(self):
        return "</{}>".format(self.tag)

    @property
    def empty(self):
        return "<{}/>".format(self.tag)

    @property
    def is_text(self):
        return isinstance(self.content, str)

    def children(self):
        return [] if self.is_text else self.content

    def find_all(self, tag):
        """Descendant frames with ``tag`` in document order."""
        found = []
        for child in self.children():
            if child.tag == tag:
                found.append(child)
            found.extend(child.find_all(tag))
        return found

    def __repr__(self):
        return "ElementFrame({!r}, {!r})".format(self.tag, self.content)


class XmlTree:
    """Element tree with a single root. Text is kept unescaped."""
    def __init__(self, root):
        self.root = root

    def find_all(self, tag):
        found = [self.root] if self.root.tag == tag else []
        return found + self.root.find_all(tag)


def _number(text):
    if text and all(c in DIGITS for c in text):
        return to_western_digits(text)
    return text


def _text(tag, text):
    return ElementFrame(tag, text)


def _list(tag, item_tag, items):
    return ElementFrame(tag, [_text(item_tag, item) for item in items])


def article_frame(article):
    if article.title is None:
        title = ElementFrame("articleTitle")
    else:
        title = _text("articleTitle", article.title)
    return ElementFrame("article", [
        _text("articleNumber", _number(article.number)),
        title,
        _text("articleContent", article.content),
    ])


def signature_frame(signature):
    name = _text("name", signature.name)
    position = _text("position", signature.position)
    if signature.variant == TYPE1:
        return ElementFrame("signature", [name, position])
    return ElementFrame("signature", [position, name])


def generate(doc, root_tag="document"):
    """Build the element tree of a document.

    Statement type precedes the document number. Document and numeric
    article numbers are converted to western digits, every other text is
    kept as written.

    Args:
        doc (Document): Accepted document.
        root_tag (str): Root element name.

    Returns:
        XmlTree
    """
    content = [
        _text("type", doc.statement.doc_type),
        _text("contentNumber", _number(doc.statement.number)),
        _text("title", doc.title),
        _text("issuer", doc.issuer),
        _list("references", "reference", doc.references),
        _list("justifications", "justification", doc.justifications),
        ElementFrame("articles", [article_frame(a) for a in doc.articles]),
        _text("issueLocation", doc.loc_date.location),
        _text("issueDate", doc.loc_date.date),
        ElementFrame("signatures",
                     [signature_frame(s) for s in doc.signatures]),
    ]
    logger.debug("%d articles, %d signatures", len(doc.articles),
                 len(doc.signatures))
    return XmlTree(ElementFrame(root_tag, content))
