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

"""Preprocessor.

Turns raw input bytes into line and word records the scanner can walk,
and provides the orthographic folding used for keyword matching.
"""

from collections import namedtuple
import logging
import unicodedata


logger = logging.getLogger(__name__)


BOM = b"\xef\xbb\xbf"

ARABIC_INDIC_DIGITS = "٠١٢٣٤٥٦٧٨٩"
WESTERN_DIGITS = "0123456789"
DIGITS = frozenset(ARABIC_INDIC_DIGITS + WESTERN_DIGITS)

# delimiters that can be detached from the end of a word
DELIMITERS = "،.:"

_WESTERN = str.maketrans(ARABIC_INDIC_DIGITS, WESTERN_DIGITS)

_FOLD = str.maketrans({
    "أ": "ا",
    "إ": "ا",
    "آ": "ا",
    "ٱ": "ا",
    "ة": "ه",
    "ى": "ي",
    "ـ": None,  # tatweel
})


class DecodeError(ValueError):
    """Raised when the input is not valid UTF-8.

    Attributes:
        offset (int): Byte offset of the first invalid sequence in the raw
            input (a stripped byte-order mark is counted).
        reason (str): Codec explanation.
    """
    def __init__(self, offset, reason):
        super().__init__("invalid UTF-8 at byte {}: {}".format(
            offset, reason))
        self.offset = offset
        self.reason = reason


Word = namedtuple("Word", "text start end")
Word.__doc__ = """A word and its ``[start, end)`` character offsets into
:attr:`NormalizedText.text`."""

Line = namedtuple("Line", "number words")
Line.__doc__ = """A non-blank line: 1-based source line ``number`` and a
tuple of :class:`Word`."""


class NormalizedText:
    """Preprocessed document.

    Lines never carry leading or trailing whitespace, words are separated
    by exactly one space in :attr:`text` and blank lines are dropped.

    Attributes:
        text (str): NFC text, lines joined by ``"\\n"``.
        lines (tuple[Line]): Non-blank lines in source order.
        source_name (str): Name used in diagnostics.
    """
    def __init__(self, lines, source_name="<input>"):
        self.source_name = source_name
        parts = []
        records = []
        offset = 0
        for number, words in lines:
            recorded = []
            for i, word in enumerate(words):
                if i:
                    offset += 1
                recorded.append(Word(word, offset, offset + len(word)))
                offset += len(word)
            parts.append(" ".join(words))
            records.append(Line(number, tuple(recorded)))
            offset += 1
        self.text = "\n".join(parts)
        self.lines = tuple(records)

    def line_text(self, index):
        """Return the normalized text of line ``index``."""
        return " ".join(w.text for w in self.lines[index].words)

    def words(self):
        """All words in document order."""
        return [w.text for line in self.lines for w in line.words]

    def __repr__(self):
        return "NormalizedText({!r}, {} lines)".format(
            self.source_name, len(self.lines))


def preprocess(raw, source_name="<input>"):
    """Decode, normalize and segment raw input.

    CR LF and lone CR become LF, the text is NFC normalized, each line is
    split on whitespace runs and blank lines are dropped. Word content is
    otherwise untouched.

    Args:
        raw (bytes): UTF-8 input, optionally with a byte-order mark.
        source_name (str): Name for diagnostics.

    Returns:
        NormalizedText

    Raises:
        DecodeError: ``raw`` is not valid UTF-8.
    """
    skipped = 0
    if raw.startswith(BOM):
        raw = raw[len(BOM):]
        skipped = len(BOM)
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise DecodeError(e.start + skipped, e.reason) from None
    text = unicodedata.normalize("NFC", text)
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    lines = []
    for number, line in enumerate(text.split("\n"), 1):
        words = line.split()
        if words:
            lines.append((number, words))
    logger.debug("%s: %d lines", source_name, len(lines))
    return NormalizedText(lines, source_name)


FoldedWord = namedtuple("FoldedWord", "folded original stem trailing")
FoldedWord.__doc__ = """Matching key of a word.

``folded`` is the key, ``original`` the word as written, ``stem`` the
original without its detached trailing delimiters and ``trailing`` those
delimiters (``stem + trailing == original``).
"""


def fold_for_matching(word):
    """Fold a word for keyword matching.

    Alef variants map to bare alef, teh marbuta to heh, alef maksura to
    yeh and tatweel is removed. Trailing "،", "." and ":" are detached and
    recorded. Words made only of delimiters are kept whole.

    >>> fold_for_matching("الإمضاء:").folded
    'الامضاء'

    Args:
        word (str): Non-empty word.

    Returns:
        FoldedWord
    """
    if not word:
        raise ValueError("cannot fold an empty word")
    stem = word.rstrip(DELIMITERS)
    if not stem:
        return FoldedWord(word, word, word, "")
    folded = stem.translate(_FOLD).rstrip(DELIMITERS)
    if not folded:
        folded = stem
    return FoldedWord(folded, word, stem, word[len(stem):])


def to_western_digits(text):
    """Replace Arabic-Indic digits with ASCII digits."""
    return text.translate(_WESTERN)


def has_digit(word):
    return any(c in DIGITS for c in word)
