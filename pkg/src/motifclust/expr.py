"""Recursive-descent parser for functor expressions.

Grammar (whitespace between tokens is ignored)::

    expr  := term ('+' term)*
    term  := atom ('.' atom)*          # left is outer: tc.ls = tc after ls
    atom  := '(' expr ')' | leaf
    leaf  := disc | conn | comp | rev | ls | id | us | tc | rec | nrec | uni
           | power:INT | semirec:INT | motif:PATH | pmotif:PATH

``PATH`` is either double-quoted or runs up to the next whitespace, ``+`` or
parenthesis; it may contain dots, so put a space (or parentheses) between a
motif path and a following ``.``.
"""
from __future__ import annotations

from typing import Callable, Optional

from .errors import ParseError
from .family import MotifFamily
from .functors import BUILTIN_NAMES, Builtin, Compose, Expr, Motif, PMotif, Power, Semirec, Union

FamilyLoader = Callable[[str, bool], MotifFamily]

_PARAM_LEAVES = ("power", "semirec", "motif", "pmotif")
_LEAF_NAMES = BUILTIN_NAMES + ("unilateral",) + _PARAM_LEAVES


def _default_loader(path: str, pointed: bool) -> MotifFamily:
    from .io import load_family
    fam = load_family(path)
    if fam.pointed != pointed:
        kind = "pointed" if pointed else "unpointed"
        raise ParseError(f"family file {path!r} is not {kind}", 0, ())
    return fam


class _Parser:
    def __init__(self, text: str, loader: FamilyLoader):
        self.text = text
        self.pos = 0
        self.loader = loader

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, msg: str, expected) -> ParseError:
        return ParseError(msg, self.pos, tuple(expected))

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek():
            raise self.fail(f"unexpected {self.peek()!r}", ("'+'", "'.'", "end of input"))
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek() == "+":
            self.pos += 1
            e = Union(e, self.term())
        return e

    def term(self) -> Expr:
        parts = [self.atom()]
        while self.peek() == ".":
            self.pos += 1
            parts.append(self.atom())
        out = parts[-1]
        for p in reversed(parts[:-1]):
            out = Compose(p, out)
        return out

    def atom(self) -> Expr:
        c = self.peek()
        if c == "(":
            self.pos += 1
            e = self.expr()
            if self.peek() != ")":
                raise self.fail("unbalanced parenthesis", ("')'",))
            self.pos += 1
            return e
        return self.leaf()

    def leaf(self) -> Expr:
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalpha()):
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            self.pos = start
            raise self.fail("expected a functor", ("'('",) + tuple(_LEAF_NAMES))
        if name in _PARAM_LEAVES:
            if self.pos >= len(self.text) or self.text[self.pos] != ":":
                raise self.fail(f"{name} needs an argument", ("':'",))
            self.pos += 1
            if name in ("power", "semirec"):
                return self.int_leaf(name)
            return self.family_leaf(name)
        if name in BUILTIN_NAMES or name == "unilateral":
            return Builtin(name)
        self.pos = start
        raise self.fail(f"unknown functor {name!r}", _LEAF_NAMES)

    def int_leaf(self, name: str) -> Expr:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits or int(digits) < 1:
            self.pos = start
            raise self.fail(f"{name} needs a positive integer", ("positive integer",))
        return Power(int(digits)) if name == "power" else Semirec(int(digits))

    def family_leaf(self, name: str) -> Expr:
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == '"':
            end = self.text.find('"', self.pos + 1)
            if end < 0:
                raise self.fail("unterminated quoted path", ("'\"'",))
            path = self.text[self.pos + 1:end]
            self.pos = end + 1
        else:
            while self.pos < len(self.text) and not (self.text[self.pos].isspace() or self.text[self.pos] in "+()"):
                self.pos += 1
            path = self.text[start:self.pos]
        if not path:
            raise self.fail(f"{name} needs a family file", ("path",))
        pointed = name == "pmotif"
        try:
            fam = self.loader(path, pointed)
        except ParseError:
            raise
        except (OSError, ValueError) as exc:
            raise ParseError(f"cannot load family {path!r}: {exc}", start, ("readable family file",)) from exc
        if not fam.name:
            fam = MotifFamily(fam.pointed, fam.elements, path)
        return PMotif(fam) if pointed else Motif(fam)


def parse_expr(text: str, loader: Optional[FamilyLoader] = None) -> Expr:
    """Parse ``text`` into a functor expression; motif files go through ``loader``."""
    return _Parser(text, loader or _default_loader).parse()
