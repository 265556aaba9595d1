#!/usr/bin/env python3
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


import sys

if __name__ == "__main__":
    from os.path import join as path_join, dirname, pardir
    sys.path.insert(0, path_join(dirname(__file__), pardir))
    import legalc.cli
    sys.exit(legalc.cli.main())


import argparse
import contextlib
import io
import logging
import os

from .frontend.normalizer import preprocess, DecodeError
from .frontend.scanner import TokenKind, describe, dump_tokens
from .frontend.parser import Parser, TextSource
from .frontend.document import ParseError, dump_ast
from .backend.codegen import generate
from .backend.xml import EmitConfig, serialize


logger = logging.getLogger(__name__)


OK = 0
REJECTED = 1
USAGE = 2

_ORDER = list(TokenKind)


def get_argparser():
    parser = argparse.ArgumentParser(description="""Legal document
            compiler. Parses Arabic legal texts (laws, decisions and
            decrees) and writes them as XML.""")
    parser.add_argument("inputs", nargs="+", metavar="INPUT",
                        help="input text files, '-' for standard input")
    parser.add_argument("-o", "--output",
                        help="output file, only with a single input "
                        "[input name with .xml, standard output for '-']")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--validate", default=False, action="store_true",
                      help="parse only, write nothing [%(default)s]")
    mode.add_argument("--dump-tokens", default=False, action="store_true",
                      help="print the token stream [%(default)s]")
    mode.add_argument("--dump-ast", default=False, action="store_true",
                      help="print the syntax tree [%(default)s]")
    parser.add_argument("--indent", default=2, type=int,
                        help="spaces per XML nesting level [%(default)s]")
    parser.add_argument("--root-tag", default="document",
                        help="XML root element name [%(default)s]")
    parser.add_argument("--no-declaration", default=False,
                        action="store_true",
                        help="omit the XML declaration [%(default)s]")
    parser.add_argument("-d", "--debug", default=False,
                        action="store_true", help="debug logging")
    return parser


def render_diagnostic(diagnostic, text):
    """Format a diagnostic for the error stream.

    The header names the source line number and the 1-based word index,
    followed by the normalized line, a caret marker under the span and the
    expected set, if any.

    Args:
        diagnostic (Diagnostic): Finding to render.
        text (NormalizedText): Document it refers to.

    Returns:
        str: Newline terminated lines.
    """
    span = diagnostic.span
    if not text.lines:
        number, line, column, width = 1, "", 0, 1
    else:
        index = min(span.start_line, len(text.lines) - 1)
        words = text.lines[index].words
        number = text.lines[index].number
        line = text.line_text(index)
        first = words[0].start
        if span.start_word >= len(words):
            column, width = len(line) + 1, 1
        else:
            last = len(words) - 1
            if span.end_line == span.start_line:
                last = min(max(span.end_word, span.start_word), last)
            column = words[span.start_word].start - first
            width = words[last].end - words[span.start_word].start
    out = ["{}: {} at {}:{}:{}".format(
        diagnostic.severity, diagnostic.message, text.source_name, number,
        span.start_word + 1), line, " "*column + "^"*width]
    if diagnostic.expected:
        out.append("expected: " + ", ".join(
            describe(k) for k in sorted(diagnostic.expected,
                                        key=_ORDER.index)))
    return "".join(s + "\n" for s in out)


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    with open(path, "rb") as f:
        return f.read()


def _write(path, data, stdout):
    if path is None:
        stdout.write(data)
        stdout.flush()
        return
    with open(path, "wb") as f:
        f.write(data)


def compile_one(path, args, cfg, stdin, stdout, stderr):
    """Run the pipeline on one input.

    Returns:
        int: Exit code for this input.
    """
    name = "<stdin>" if path == "-" else path
    try:
        raw = _read(path, stdin)
    except OSError as e:
        stderr.write("error: {}: {}\n".format(name, e.strerror or e))
        return USAGE
    try:
        text = preprocess(raw, name)
    except DecodeError as e:
        stderr.write("error: {}: {}\n".format(name, e))
        return USAGE
    source = TextSource(text)
    parser = Parser(source)
    try:
        doc = parser.parse()
    except ParseError as e:
        if args.dump_tokens:
            _write(None, dump_tokens(source.tokens, text).encode("utf-8"),
                   stdout)
        for diagnostic in e.diagnostics:
            stderr.write(render_diagnostic(diagnostic, text))
        return REJECTED
    if args.dump_tokens:
        _write(None, dump_tokens(source.tokens, text).encode("utf-8"),
               stdout)
    elif args.dump_ast:
        _write(None, dump_ast(doc).encode("utf-8"), stdout)
    elif not args.validate:
        target = args.output
        if target is None and path != "-":
            target = os.path.splitext(path)[0] + ".xml"
        try:
            _write(target, serialize(generate(doc, cfg.root_tag), cfg),
                   stdout)
        except OSError as e:
            stderr.write("error: {}: {}\n".format(target, e.strerror or e))
            return USAGE
        logger.info("%s: wrote %s", name, target or "<stdout>")
    logger.info("%s: ok, %d warnings", name, len(parser.warnings))
    return OK


def run(argv=None, stdin=None, stdout=None, stderr=None):
    """Command line entry point without process side effects.

    Args:
        argv (list[str]): Arguments without the program name.
        stdin: Binary input stream for ``-``.
        stdout: Binary stream for XML and dumps.
        stderr: Text stream for diagnostics and usage messages.

    Returns:
        int: 0 on success, 1 when an input is rejected by the grammar, 2
        on usage, I/O or decoding errors. The largest code over all
        inputs.
    """
    if stdin is None:
        stdin = sys.stdin.buffer
    if stdout is None:
        stdout = sys.stdout.buffer
    if stderr is None:
        stderr = sys.stderr
    parser = get_argparser()
    help_text = io.StringIO()
    try:
        with contextlib.redirect_stderr(stderr), \
                contextlib.redirect_stdout(help_text):
            args = parser.parse_args(args=argv)
    except SystemExit as e:
        stdout.write(help_text.getvalue().encode("utf-8"))
        return e.code if isinstance(e.code, int) else USAGE

    if args.debug:
        logging.basicConfig(level=logging.DEBUG)
    else:
        logging.basicConfig(level=logging.WARNING)

    usage = None
    if len(args.inputs) > 1:
        if args.output is not None:
            usage = "--output needs a single input"
        elif args.dump_tokens or args.dump_ast:
            usage = "dumps need a single input"
        elif "-" in args.inputs:
            usage = "standard input can not be batched"
    try:
        cfg = EmitConfig(root_tag=args.root_tag, indent=args.indent,
                         xml_declaration=not args.no_declaration)
    except ValueError as e:
        usage = str(e)
    if usage is not None:
        parser.print_usage(stderr)
        stderr.write("{}: error: {}\n".format(parser.prog, usage))
        return USAGE

    code = OK
    for path in args.inputs:
        code = max(code, compile_one(path, args, cfg, stdin, stdout, stderr))
    return code


def main(args=None):
    """Compile legal documents to XML.

    Parse command line arguments, then preprocess, parse and translate
    each input. Diagnostics go to standard error.
    """
    return run(args)
