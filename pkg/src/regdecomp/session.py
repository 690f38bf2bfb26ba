"""Session files: a tiny line-oriented language for rings, bindings and one command.

Grammar::

    session   := statement*
    statement := 'ring' FIELD '[' NAME (',' NAME)* ']' ';'
               | 'let' NAME '=' poly ';'
               | 'seq' NAME '=' '(' poly (',' poly)* ')' ';'
               | 'ideal' NAME '=' '(' poly (',' poly)* ')' ';'
               | COMMAND target param* ';'      (final ';' optional)
    target    := NAME-of-seq-or-ideal | '(' poly (',' poly)* ')' | poly
    param     := NAME ('=' | '<=') value
    value     := INT | '(' INT (',' INT)* ')' | '(' poly (',' poly)* ')' | poly
    poly      := ['+'|'-'] term (('+'|'-') term)*
    term      := factor (['*'] factor)*      ('*' optional only after a number)
    factor    := atom ['^' INT]
    atom      := INT ['/' INT] | NAME | '(' poly ')'

``FIELD`` is ``Q`` or ``F<p>`` for a prime ``p``.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .errors import SessionError
from .ring import RATIONALS, CoefficientField, Polynomial, RingDescriptor

COMMANDS = ("check-regseq", "decompose", "sweep", "power-sweep", "artin-rees", "colon-check")

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|\#[^\n]*)
  | (?P<nl>\n)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><=|[;,()\[\]=+\-*/^])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', 'name', 'op', 'eof'
    text: str
    line: int
    column: int
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SessionError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1, pos))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1, pos))
    return tokens


@dataclass(frozen=True)
class Ref:
    """A reference to a ``seq`` or ``ideal`` binding."""

    name: str


Value = Union[int, Tuple[int, ...], Polynomial, Tuple[Polynomial, ...], Ref]


@dataclass(frozen=True)
class Binding:
    kind: str  # 'let', 'seq' or 'ideal'
    name: str
    value: Union[Polynomial, Tuple[Polynomial, ...]]


@dataclass(frozen=True)
class Param:
    name: str
    op: str
    value: Value


@dataclass(frozen=True)
class Command:
    name: str
    target: Value
    params: Tuple[Param, ...]

    def param(self, name, default=None):
        for p in self.params:
            if p.name == name:
                return p.value
        return default


@dataclass(frozen=True)
class SessionInput:
    ring: RingDescriptor
    bindings: Tuple[Binding, ...]
    command: Command

    def binding(self, name: str) -> Binding:
        for b in self.bindings:
            if b.name == name:
                return b
        raise KeyError(name)


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0
        self.ring: Optional[RingDescriptor] = None
        self.bindings: dict = {}
        self.command: Optional[Command] = None

    # -- token helpers ------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return SessionError(message, tok.line, tok.column)

    def advance(self) -> Token:
        tok = self.tok
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at(self, text) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def expect(self, text) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def expect_name(self) -> Token:
        if self.tok.kind != "name":
            raise self.error(f"expected an identifier, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            raise self.error(f"expected an integer, found {self.tok.text or 'end of input'!r}")
        return int(self.advance().text)

    def end_statement(self, optional=False):
        if self.at(";"):
            self.advance()
        elif not (optional and self.tok.kind == "eof"):
            raise self.error(f"expected ';', found {self.tok.text or 'end of input'!r}")

    # -- statements ---------------------------------------------------------

    def parse(self) -> SessionInput:
        while self.tok.kind != "eof":
            self.statement()
        if self.ring is None:
            raise SessionError("session declares no ring", 1, 1)
        if self.command is None:
            raise self.error("session has no command")
        return SessionInput(self.ring, tuple(self.bindings.values()), self.command)

    def statement(self):
        start = self.tok
        word = self.command_word()
        if word == "ring":
            self.ring_decl(start)
            return
        if self.ring is None:
            raise self.error("the ring must be declared first", start)
        if word in ("let", "seq", "ideal"):
            self.binding(word)
        elif word in COMMANDS:
            if self.command is not None:
                raise self.error("a session holds exactly one command", start)
            self.command_stmt(word)
        else:
            raise self.error(f"unknown statement {word!r}", start)

    def command_word(self) -> str:
        """Read a word, joining hyphen-connected pieces such as ``power-sweep``."""
        tok = self.expect_name()
        word = tok.text
        end = tok.offset + len(tok.text)
        while (self.at("-") and self.tok.offset == end
               and self.peek().kind == "name" and self.peek().offset == end + 1):
            self.advance()
            nxt = self.advance()
            word += "-" + nxt.text
            end = nxt.offset + len(nxt.text)
        return word

    def ring_decl(self, start):
        if self.ring is not None:
            raise self.error("a session declares exactly one ring", start)
        ftok = self.expect_name()
        field = self.field(ftok)
        self.expect("[")
        names = [self.expect_name().text]
        while self.at(","):
            self.advance()
            names.append(self.expect_name().text)
        self.expect("]")
        self.end_statement()
        try:
            self.ring = RingDescriptor(tuple(names), field)
        except ValueError as exc:
            raise self.error(str(exc), ftok) from None

    def field(self, tok) -> CoefficientField:
        if tok.text == "Q":
            return RATIONALS
        m = re.fullmatch(r"F(\d+)", tok.text)
        if m:
            try:
                return CoefficientField(int(m.group(1)))
            except ValueError as exc:
                raise self.error(str(exc), tok) from None
        raise self.error(f"unknown coefficient field {tok.text!r} (use Q or F<p>)", tok)

    def binding(self, kind):
        ntok = self.expect_name()
        name = ntok.text
        if name in self.ring.variable_names:
            raise self.error(f"{name!r} is already a ring variable", ntok)
        if name in self.bindings:
            raise self.error(f"{name!r} is already bound", ntok)
        self.expect("=")
        if kind == "let":
            value = self.poly()
        else:
            value = self.poly_tuple()
        self.end_statement()
        self.bindings[name] = Binding(kind, name, value)

    def command_stmt(self, word):
        target = self.target()
        params = []
        while self.tok.kind == "name":
            ptok = self.advance()
            if not (self.at("=") or self.at("<=")):
                raise self.error(f"expected '=' or '<=' after parameter {ptok.text!r}")
            op = self.advance().text
            if any(p.name == ptok.text for p in params):
                raise self.error(f"parameter {ptok.text!r} given twice", ptok)
            params.append(Param(ptok.text, op, self.value()))
        self.end_statement(optional=True)
        self.command = Command(word, target, tuple(params))

    def target(self) -> Value:
        tok = self.tok
        if tok.kind == "name" and tok.text in self.bindings:
            b = self.bindings[tok.text]
            nxt = self.peek()
            if b.kind != "let" and not (nxt.kind == "op" and nxt.text in "+-*^"):
                self.advance()
                return Ref(tok.text)
        if self.at("("):
            return self.poly_tuple()
        return self.poly()

    def value(self) -> Value:
        # plain integer literals stay ints so they are never reduced mod p
        nxt = self.peek()
        if self.tok.kind == "int" and (nxt.kind in ("name", "eof") or nxt.text == ";"):
            return self.expect_int()
        if self.at("("):
            k = self.pos + 1
            ints = True
            while True:
                if self.tokens[k].kind != "int":
                    ints = False
                    break
                k += 1
                if self.tokens[k].text == ")":
                    break
                if self.tokens[k].text != ",":
                    ints = False
                    break
                k += 1
            if ints:
                self.advance()
                vals = [self.expect_int()]
                while self.at(","):
                    self.advance()
                    vals.append(self.expect_int())
                self.expect(")")
                return tuple(vals)
            return self.poly_tuple()
        return self.poly()

    # -- polynomials --------------------------------------------------------

    def poly_tuple(self) -> Tuple[Polynomial, ...]:
        self.expect("(")
        items = [self.poly()]
        while self.at(","):
            self.advance()
            items.append(self.poly())
        self.expect(")")
        return tuple(items)

    def poly(self) -> Polynomial:
        negate = False
        if self.at("+") or self.at("-"):
            negate = self.advance().text == "-"
        result = self.term()
        if negate:
            result = -result
        while self.at("+") or self.at("-"):
            op = self.advance().text
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            if self.at("*"):
                self.advance()
                result = result * self.factor()
            elif self._implicit_product():
                result = result * self.factor()
            else:
                return result

    def _implicit_product(self) -> bool:
        """A name glued to the preceding number, as in ``3a^2``."""
        prev = self.tokens[self.pos - 1]
        return (self.tok.kind == "name" and prev.kind == "int"
                and prev.offset + len(prev.text) == self.tok.offset)

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.at("^"):
            self.advance()
            base = base ** self.expect_int()
        return base

    def atom(self) -> Polynomial:
        ring = self.ring
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            value = Fraction(int(tok.text))
            if self.at("/"):
                self.advance()
                den = self.expect_int()
                if den == 0:
                    raise self.error("zero denominator", tok)
                value /= den
            try:
                return ring.constant(value)
            except ZeroDivisionError as exc:
                raise self.error(str(exc), tok) from None
        if tok.kind == "name":
            self.advance()
            if tok.text in ring.variable_names:
                return ring.var(tok.text)
            b = self.bindings.get(tok.text)
            if b is not None:
                if b.kind != "let":
                    raise self.error(f"{tok.text!r} is a {b.kind}, not a polynomial", tok)
                return b.value
            raise self.error(f"unbound variable {tok.text}", tok)
        if self.at("("):
            self.advance()
            p = self.poly()
            self.expect(")")
            return p
        raise self.error(f"unexpected {tok.text or 'end of input'!r} in polynomial", tok)


def parse_session(text: str) -> SessionInput:
    """Parse session text; raises :class:`SessionError` with line and column."""
    return _Parser(text).parse()


def format_value(value: Value) -> str:
    if isinstance(value, Ref):
        return value.name
    if isinstance(value, tuple):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


def format_command(cmd: Command) -> str:
    parts = [cmd.name, format_value(cmd.target)]
    parts += [f"{p.name}{p.op}{format_value(p.value)}" for p in cmd.params]
    return " ".join(parts)


def format_session(session: SessionInput) -> str:
    """Render a session back to text that parses to an equal :class:`SessionInput`."""
    ring = session.ring
    lines = [f"ring {ring.field}[{','.join(ring.variable_names)}];"]
    for b in session.bindings:
        lines.append(f"{b.kind} {b.name} = {format_value(b.value)};")
    lines.append(format_command(session.command) + ";")
    return "\n".join(lines) + "\n"
