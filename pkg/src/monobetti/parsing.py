"""Text grammar for monomial ideals.

    ideal     := [ "vars:" ident ("," ident)* (";" | newline) ] generator ("," generator)*
    generator := term ("*" term)*
    term      := ident ["^" positive-integer]

Whitespace is insignificant.  Without a ``vars:`` header the variable
order is the order of first appearance.  ``1`` is not a valid generator.
"""

from __future__ import annotations

import re
from typing import Sequence

from .core import Monomial, MonomialIdeal
from .errors import InputError

__all__ = ["parse_ideal", "parse_monomial", "format_ideal", "read_corpus"]

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>[0-9]+)|(?P<op>[,*^;:])"
)


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                self.fail(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            if kind != "ws":
                self.tokens.append((kind, m.group(), pos))
            elif "\n" in m.group():
                self.tokens.append(("nl", "\n", pos))
            pos = m.end()
        self.i = 0

    def fail(self, msg: str, pos: int | None = None):
        if pos is None:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        raise InputError(f"syntax error at line {line}, column {col}: {msg}")

    def skip_nl(self):
        while self.i < len(self.tokens) and self.tokens[self.i][0] == "nl":
            self.i += 1

    def peek(self):
        self.skip_nl()
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, kind: str, value: str | None = None) -> str:
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = "end of input" if tok is None else repr(tok[1])
            self.fail(f"expected {want}, got {got}")
        self.i += 1
        return tok[1]


def _parse_generator(lx: _Lexer, order: list[str]) -> Monomial:
    exps: list[tuple[str, int]] = []
    while True:
        tok = lx.peek()
        if tok is not None and tok[0] == "int":
            lx.fail("a generator must be a product of variables (constants are not allowed)")
        name = lx.take("ident")
        e = 1
        tok = lx.peek()
        if tok is not None and tok[1] == "^":
            lx.i += 1
            tok = lx.peek()
            raw = lx.take("int")
            e = int(raw)
            if e == 0:
                lx.fail("zero exponent", tok[2])
        if name not in order:
            order.append(name)
        exps.append((name, e))
        tok = lx.peek()
        if tok is None or tok[1] != "*":
            return Monomial(tuple(exps))
        lx.i += 1


def parse_ideal(text: str, variables: Sequence[str] | None = None) -> MonomialIdeal:
    lx = _Lexer(text)
    order: list[str] = []
    declared: list[str] | None = list(variables) if variables is not None else None
    tok = lx.peek()
    if tok is not None and tok == ("ident", "vars", tok[2]) and lx.i + 1 < len(lx.tokens) \
            and lx.tokens[lx.i + 1][1] == ":":
        lx.i += 2
        declared = [lx.take("ident")]
        while True:
            # the header ends at ';' or at a newline
            if lx.i < len(lx.tokens) and lx.tokens[lx.i][0] == "nl":
                break
            tok = lx.peek()
            if tok is None:
                lx.fail("expected generators after vars: header")
            if tok[1] == ";":
                lx.i += 1
                break
            lx.take("op", ",")
            declared.append(lx.take("ident"))
        if len(set(declared)) != len(declared):
            lx.fail("duplicate variable in vars: header")
    gens = [_parse_generator(lx, order)]
    while lx.peek() is not None:
        lx.take("op", ",")
        gens.append(_parse_generator(lx, order))
    if declared is not None:
        unknown = [v for v in order if v not in declared]
        if unknown:
            raise InputError(f"variables {unknown} not declared in vars: header")
        order = declared
    return MonomialIdeal(tuple(order), tuple(gens))


def parse_monomial(text: str) -> Monomial:
    lx = _Lexer(text)
    if lx.peek() is not None and lx.peek()[1] == "1" and len(lx.tokens) == 1:
        return Monomial()
    m = _parse_generator(lx, [])
    if lx.peek() is not None:
        lx.fail("trailing input after monomial")
    return m


def format_ideal(I: MonomialIdeal, header: bool = True) -> str:
    body = I.to_str()
    if header:
        return f"vars: {', '.join(I.variables)}; {body}"
    return body


def read_corpus(text: str) -> list[MonomialIdeal]:
    """One ideal per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_ideal(line))
        except InputError as exc:
            raise InputError(f"corpus line {lineno}: {exc}") from None
    return out
