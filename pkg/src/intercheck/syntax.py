"""Concrete syntax for models and multi-traces.

Model file::

    signature { lifelines = a, b, c; messages = m1, m2; }
    interaction { seq(strict(a!m1, b?m1), par(b!m2, 0)) }

Operators ``strict``, ``seq``, ``alt`` and ``par`` take two or more operands
and fold to the right; ``loop_strict``, ``loop_seq`` and ``loop_par`` take
exactly one.  ``0`` is the empty interaction and ``#`` starts a comment.

Multi-trace file::

    { a: a!m1.a?m4; b: eps; c: c!m4 }
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import (
    ArityError,
    DuplicateComponent,
    MissingComponent,
    TermSyntaxError,
    UnknownLifeline,
    UnknownMessage,
    WrongLifeline,
)
from .interaction import BINARY_OPS, EMPTY, Binary, Loop, Term, leaf, to_text
from .trace import Action, Direction, MultiTrace, Signature

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<zero>0)
  | (?P<punct>[{}(),;=!?.:])
""", re.VERBOSE)

_LOOPS = {"loop_strict": "strict", "loop_seq": "seq", "loop_par": "par"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        for k, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                line_start = pos + k + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, sig: Optional[Signature] = None):
        self.tokens = tokenize(text)
        self.k = 0
        self.sig = sig

    @property
    def tok(self) -> Token:
        return self.tokens[self.k]

    def peek(self, offset=1) -> Token:
        return self.tokens[min(self.k + offset, len(self.tokens) - 1)]

    def error(self, msg, tok=None, cls=TermSyntaxError):
        tok = tok or self.tok
        return cls(msg, tok.line, tok.column)

    def expect(self, text=None, kind=None) -> Token:
        tok = self.tok
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            wanted = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.kind != "eof" else "end of input"
            raise self.error(f"expected {wanted}, got {got}")
        self.k += 1
        return tok

    def accept(self, text) -> bool:
        if self.tok.text == text and self.tok.kind != "eof":
            self.k += 1
            return True
        return False

    def ident(self) -> Token:
        return self.expect(kind="ident")

    def action(self) -> Action:
        life = self.ident()
        arrow = self.tok
        if arrow.text not in ("!", "?"):
            raise self.error(f"expected '!' or '?' after {life.text!r}")
        self.k += 1
        msg = self.ident()
        act = Action(life.text, Direction(arrow.text), msg.text)
        if self.sig is not None:
            if life.text not in self.sig.lifelines:
                raise self.error(f"unknown lifeline {life.text!r}", life, UnknownLifeline)
            if msg.text not in self.sig.messages:
                raise self.error(f"unknown message {msg.text!r}", msg, UnknownMessage)
        return act

    def term(self) -> Term:
        tok = self.tok
        if tok.kind == "zero":
            self.k += 1
            return EMPTY
        if tok.kind != "ident":
            raise self.error("expected an interaction term")
        if self.peek().text == "(":
            if tok.text in BINARY_OPS or tok.text in _LOOPS:
                return self.application()
            raise self.error(f"unknown operator {tok.text!r}")
        return leaf(self.action())

    def application(self) -> Term:
        op = self.ident()
        self.expect("(")
        args = [self.term()]
        while self.accept(","):
            args.append(self.term())
        self.expect(")")
        if op.text in _LOOPS:
            if len(args) != 1:
                raise self.error(f"{op.text} takes exactly one operand, got {len(args)}", op, ArityError)
            return Loop(_LOOPS[op.text], args[0])
        if len(args) < 2:
            raise self.error(f"{op.text} takes at least two operands", op, ArityError)
        out = args[-1]
        for a in reversed(args[:-1]):
            out = Binary(op.text, a, out)
        return out

    def name_list(self) -> list[str]:
        names = [self.ident().text]
        while self.accept(","):
            names.append(self.ident().text)
        return names

    def signature(self) -> Signature:
        self.expect("signature")
        self.expect("{")
        lists = {}
        for _ in range(2):
            key = self.ident()
            if key.text not in ("lifelines", "messages") or key.text in lists:
                raise self.error("expected 'lifelines = ...;' then 'messages = ...;'", key)
            self.expect("=")
            lists[key.text] = (key, self.name_list())
            self.expect(";")
        self.expect("}")
        for key, names in lists.values():
            if len(set(names)) != len(names):
                raise self.error(f"duplicate name in {key.text}", key)
        return Signature(tuple(lists["lifelines"][1]), tuple(lists["messages"][1]))

    def model(self) -> tuple[Signature, Term]:
        self.sig = self.signature()
        self.expect("interaction")
        self.expect("{")
        term = self.term()
        self.expect("}")
        self.expect(kind="eof")
        return self.sig, term

    def multitrace(self) -> MultiTrace:
        sig = self.sig
        comps: dict[str, tuple] = {}
        self.expect("{")
        while self.tok.text != "}":
            life = self.ident()
            if life.text not in sig.lifelines:
                raise self.error(f"unknown lifeline {life.text!r}", life, UnknownLifeline)
            if life.text in comps:
                raise self.error(f"component {life.text!r} given twice", life, DuplicateComponent)
            self.expect(":")
            acts = []
            if self.tok.text == "eps" and self.peek().text in (";", "}"):
                self.k += 1
            else:
                while True:
                    start = self.tok
                    act = self.action()
                    if act.lifeline != life.text:
                        raise self.error(f"action {act} on component {life.text!r}", start, WrongLifeline)
                    acts.append(act)
                    if not self.accept("."):
                        break
            comps[life.text] = tuple(acts)
            if not self.accept(";"):
                break
        self.expect("}")
        self.expect(kind="eof")
        missing = [l for l in sig.lifelines if l not in comps]
        if missing:
            raise MissingComponent(f"no component for lifeline(s) {', '.join(missing)}")
        return MultiTrace(sig, tuple(comps[l] for l in sig.lifelines))


def parse_term(text: str, sig: Optional[Signature] = None) -> Term:
    p = _Parser(text, sig)
    term = p.term()
    p.expect(kind="eof")
    return term


def parse_model(text: str) -> tuple[Signature, Term]:
    return _Parser(text).model()


def parse_multitrace(text: str, sig: Signature) -> MultiTrace:
    return _Parser(text, sig).multitrace()


def format_model(sig: Signature, term: Term) -> str:
    return (
        "signature {\n"
        f"    lifelines = {', '.join(sig.lifelines)};\n"
        f"    messages = {', '.join(sig.messages)};\n"
        "}\n"
        "interaction {\n"
        f"    {to_text(term)}\n"
        "}\n"
    )


def format_multitrace(mu: MultiTrace) -> str:
    return str(mu) + "\n"
