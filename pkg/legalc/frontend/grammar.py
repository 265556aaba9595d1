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

"""Grammar membership oracle.

The document grammar as a table, converted to Chomsky normal form and
decided with CYK. Nothing here shares code with the recursive descent
parser, which is checked against it.

Productions map a nonterminal name to alternatives. An alternative is a
tuple of symbols: :class:`TokenKind` terminals or nonterminal names. The
empty tuple is the empty production.
"""

import itertools
import logging

import numpy as np

from .scanner import TokenKind


logger = logging.getLogger(__name__)


_T = TokenKind

STRICT_GRAMMAR = {
    "document": [("statement", "title", "issuer", "ref-list", "just-list",
                  "acknowledge", "article-list", "loc-date", "sig-list")],
    "statement": [(_T.TYPE, _T.RAQM, _T.NUM)],
    "title": [(_T.STRING,)],
    "issuer": [(_T.INNA, _T.STRING, _T.COMMA)],
    "ref-list": [("ref", "ref-list"), ("ref",)],
    "ref": [(_T.BINAA, _T.STRING, _T.COMMA), (_T.BINAA, _T.STRING, _T.DOT)],
    "just-list": [("just", "just-list"), ()],
    "just": [(_T.HAYSOU, _T.STRING, _T.COMMA),
             (_T.HAYSOU, _T.STRING, _T.DOT)],
    "acknowledge": [(_T.YAKOUR, _T.COLON)],
    "article-list": [("article", "article-list"), ("article",)],
    "article": [(_T.MADA, "article-num", _T.COLON, "article-title",
                 "article-content")],
    "article-num": [(_T.NUM,), (_T.STRING,)],
    "article-title": [(_T.STRING,), ()],
    "article-content": [(_T.STRING,)],
    "loc-date": [(_T.STRING, _T.FI, _T.STRING), (_T.STRING, _T.STRING)],
    "sig-list": [("sig-type1",), ("sig-type2-list",)],
    "sig-type1": [(_T.IMDAA, _T.COLON, _T.STRING, _T.STRING), ()],
    "sig-type2-list": [("sig-type2", "sig-type2-list"), ("sig-type2",)],
    "sig-type2": [(_T.STRING, _T.IMDAA, _T.COLON, _T.STRING)],
}

# a keyword-first signature may be followed by position-first ones
GRAMMAR = dict(STRICT_GRAMMAR)
GRAMMAR["sig-list"] = [("sig-type1", "sig-type2-list"), ("sig-type1",),
                       ("sig-type2-list",)]


class LengthBound(ValueError):
    """Raised when an oracle input is longer than the configured bound."""


def _is_terminal(symbol):
    return isinstance(symbol, TokenKind)


def nullable(grammar):
    """Nonterminals deriving the empty string."""
    result = set()
    changed = True
    while changed:
        changed = False
        for head, alternatives in grammar.items():
            if head in result:
                continue
            if any(all(s in result for s in alt) for alt in alternatives):
                result.add(head)
                changed = True
    return result


def _min_lengths(grammar):
    inf = float("inf")
    best = {head: inf for head in grammar}
    changed = True
    while changed:
        changed = False
        for head, alternatives in grammar.items():
            for alt in alternatives:
                n = sum(1 if _is_terminal(s) else best[s] for s in alt)
                if n < best[head]:
                    best[head] = n
                    changed = True
    return best


def min_length(start="document", grammar=GRAMMAR):
    """Length of the shortest terminal string ``start`` derives.

    >>> min_length("statement")
    3
    """
    return _min_lengths(grammar)[start]


def to_cnf(grammar):
    """Convert to Chomsky normal form.

    The empty production of the start symbol is not kept, so the empty
    string has to be decided separately with :func:`nullable`.

    Returns:
        tuple[dict, dict]: Terminal rules ``{kind: {head}}`` and binary
        rules ``{head: {(left, right)}}``.
    """
    empty = nullable(grammar)
    # drop empty productions, adding every variant with nullable
    # symbols left out
    rules = {head: set() for head in grammar}
    for head, alternatives in grammar.items():
        for alt in alternatives:
            optional = [i for i, s in enumerate(alt) if s in empty]
            for r in range(len(optional) + 1):
                for dropped in itertools.combinations(optional, r):
                    body = tuple(s for i, s in enumerate(alt)
                                 if i not in dropped)
                    if body:
                        rules[head].add(body)
    # unit productions
    closure = {}
    for head in rules:
        reach = {head}
        todo = [head]
        while todo:
            for body in rules[todo.pop()]:
                if len(body) == 1 and not _is_terminal(body[0]) and \
                        body[0] not in reach:
                    reach.add(body[0])
                    todo.append(body[0])
        closure[head] = reach
    rules = {head: {body for other in reach for body in rules[other]
                    if len(body) > 1 or _is_terminal(body[0])}
             for head, reach in closure.items()}
    # terminals inside long bodies, then binarization
    terminal_rules = {}
    binary_rules = {}

    def add_binary(head, left, right):
        binary_rules.setdefault(head, set()).add((left, right))

    def lift(symbol):
        if not _is_terminal(symbol):
            return symbol
        name = "<{}>".format(symbol.name)
        terminal_rules.setdefault(symbol, set()).add(name)
        return name

    for head, bodies in rules.items():
        for body in bodies:
            if len(body) == 1:
                terminal_rules.setdefault(body[0], set()).add(head)
                continue
            body = [lift(s) for s in body]
            left = head
            for i in range(len(body) - 2):
                rest = "{}/{}".format(head, "+".join(body[i + 1:]))
                add_binary(left, body[i], rest)
                left = rest
            add_binary(left, body[-2], body[-1])
    return terminal_rules, binary_rules


class Oracle:
    """CYK recognizer for one grammar.

    Args:
        grammar (dict): Production table.
    """
    def __init__(self, grammar=GRAMMAR):
        self.grammar = grammar
        self.empty = nullable(grammar)
        terminal_rules, binary_rules = to_cnf(grammar)
        names = set(grammar)
        for heads in terminal_rules.values():
            names |= heads
        for head, pairs in binary_rules.items():
            names.add(head)
            for pair in pairs:
                names.update(pair)
        self.names = sorted(names)
        index = {name: i for i, name in enumerate(self.names)}
        self.index = index
        n = len(self.names)
        self.terminals = {}
        for kind in TokenKind:
            row = np.zeros(n, dtype=bool)
            for head in terminal_rules.get(kind, ()):
                row[index[head]] = True
            self.terminals[kind] = row
        flat = [(index[h], index[l], index[r])
                for h, pairs in binary_rules.items() for l, r in pairs]
        heads, lefts, rights = np.array(flat, dtype=int).T
        self.lefts = lefts
        self.rights = rights
        self.heads = np.zeros((len(flat), n), dtype=int)
        self.heads[np.arange(len(flat)), heads] = 1
        logger.debug("%d symbols, %d binary rules", n, len(flat))

    def table(self, kinds):
        """CYK table: ``table[l][s, a]`` is whether symbol ``a`` derives
        the ``l`` kinds starting at ``s``."""
        n = len(kinds)
        table = [None, np.array([self.terminals[k] for k in kinds])]
        for length in range(2, n + 1):
            starts = n - length + 1
            splits = range(1, length)
            left = np.stack([table[k][:starts] for k in splits])
            right = np.stack([table[length - k][k:k + starts]
                              for k in splits])
            hits = (left[:, :, self.lefts] &
                    right[:, :, self.rights]).any(axis=0)
            table.append((hits.astype(int) @ self.heads) > 0)
        return table

    def accepts(self, kinds, start="document"):
        kinds = list(kinds)
        if not kinds:
            return start in self.empty
        return bool(self.table(kinds)[len(kinds)][0, self.index[start]])


_oracles = {}


def oracle_accepts(kinds, start="document", bound=32, grammar=GRAMMAR):
    """Whether ``start`` derives the token kind sequence.

    Args:
        kinds (sequence[TokenKind]): Candidate sentence.
        start (str): Nonterminal.
        bound (int): Longest accepted input.
        grammar (dict): :data:`GRAMMAR` or :data:`STRICT_GRAMMAR`.

    Returns:
        bool

    Raises:
        LengthBound: ``len(kinds) > bound``.
    """
    kinds = list(kinds)
    if len(kinds) > bound:
        raise LengthBound("{} kinds exceed the bound of {}".format(
            len(kinds), bound))
    oracle = _oracles.get(id(grammar))
    if oracle is None or oracle.grammar is not grammar:
        oracle = _oracles[id(grammar)] = Oracle(grammar)
    return oracle.accepts(kinds, start)


def random_sentence(random_state, start="document", grammar=GRAMMAR,
                    depth=6):
    """Draw a sentence by random leftmost derivation.

    Below ``depth`` levels only the alternatives of least
    :func:`min_length` are taken, so derivations terminate.

    Args:
        random_state (numpy.random.RandomState): Source of choices.

    Returns:
        list[TokenKind]
    """
    lengths = _min_lengths(grammar)

    def shortest(alt):
        return sum(1 if _is_terminal(s) else lengths[s] for s in alt)

    def expand(symbol, level):
        if _is_terminal(symbol):
            return [symbol]
        alternatives = grammar[symbol]
        if level >= depth:
            least = min(shortest(alt) for alt in alternatives)
            alternatives = [alt for alt in alternatives
                            if shortest(alt) == least]
        alt = alternatives[random_state.randint(len(alternatives))]
        return [k for s in alt for k in expand(s, level + 1)]

    return expand(start, 0)
