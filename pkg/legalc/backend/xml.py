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

"""XML serialization."""

import logging
import re
from xml.sax import saxutils


logger = logging.getLogger(__name__)


DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>'

_NAME_START = (
    "A-Z_a-z\xc0-\xd6\xd8-\xf6\xf8-\u02ff\u0370-\u037d\u037f-\u1fff"
    "\u200c-\u200d\u2070-\u218f\u2c00-\u2fef\u3001-\ud7ff\uf900-\ufdcf"
    "\ufdf0-\ufffd")
_NAME = re.compile("[{0}][{0}\\-.0-9\xb7\u0300-\u036f\u203f-\u2040]*\\Z"
                   .format(_NAME_START))

# not allowed anywhere in an XML 1.0 document
_ILLEGAL = re.compile("[\x00-\x08\x0b\x0c\x0e-\x1f\ud800-\udfff\ufffe\uffff]")


class EmitConfig:
    """Serializer settings.

    Args:
        root_tag (str): Root element name passed to
            :func:`legalc.backend.codegen.generate`, a valid XML name.
        indent (int): Spaces per nesting level.
        xml_declaration (bool): Emit the XML declaration line.
    """
    def __init__(self, root_tag="document", indent=2, xml_declaration=True):
        if not _NAME.match(root_tag) or \
                root_tag.lower().startswith("xml"):
            raise ValueError("invalid root tag: {!r}".format(root_tag))
        if indent < 0:
            raise ValueError("indent must not be negative")
        self.root_tag = root_tag
        self.indent = indent
        self.xml_declaration = xml_declaration


def escape_xml(text):
    """Escape the five markup characters, ``&`` first.

    >>> escape_xml("&lt;")
    '&amp;lt;'
    """
    return saxutils.escape(text, {'"': "&quot;", "'": "&apos;"})


def _legal(text):
    if _ILLEGAL.search(text) is None:
        return text
    logger.warning("replacing characters not allowed in XML in %r", text)
    return _ILLEGAL.sub("\ufffd", text)


def serialize(tree, cfg=None):
    """Render an element tree.

    Children are indented by ``cfg.indent`` spaces per level, text
    elements stay on one line and empty elements are self-closed.

    Args:
        tree (XmlTree): Tree to render. Every element, the root included,
            is written with its own tag.
        cfg (EmitConfig): Settings, defaults if ``None``.

    Returns:
        bytes: UTF-8 document ending with a newline.
    """
    if cfg is None:
        cfg = EmitConfig()
    lines = []
    if cfg.xml_declaration:
        lines.append(DECLARATION)

    def emit(frame, depth):
        pad = " "*(cfg.indent*depth)
        if not frame.content:
            lines.append(pad + frame.empty)
        elif frame.is_text:
            lines.append(pad + frame.open +
                         escape_xml(_legal(frame.content)) + frame.close)
        else:
            lines.append(pad + frame.open)
            for child in frame.content:
                emit(child, depth + 1)
            lines.append(pad + frame.close)

    emit(tree.root, 0)
    return "".join(line + "\n" for line in lines).encode("utf-8")
