"""Recursive-descent parser for the ASCII formula grammar.

Grammar, loosest binding first::

    iff     := implies ("<->" implies)*
    implies := or ("->" implies)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | primary
    primary := ATOM | "T" | "F" | "(" iff ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List

from .formula import BOTTOM, TOP, And, Atom, Formula, Iff, Implies, Or, negate


class FormulaSyntaxError(ValueError):
    """Raised when formula text does not follow the grammar."""

    def __init__(self, message: str, offset: int) -> None:
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


_TOKEN = re.compile(r"\s*(?:(<->|->|[!&|()])|([A-Za-z_][A-Za-z0-9_]*))")


@dataclass(slots=True)
class _Token:
    kind: str
    text: str
    offset: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise FormulaSyntaxError(f"Unexpected character {text[offset]!r}", offset)
        if match.group(1):
            tokens.append(_Token("op", match.group(1), match.start(1)))
        else:
            name = match.group(2)
            kind = "const" if name in ("T", "F") else "atom"
            tokens.append(_Token(kind, name, match.start(2)))
        position = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _accept(self, symbol: str) -> bool:
        token = self.current
        if token.kind == "op" and token.text == symbol:
            self.index += 1
            return True
        return False

    def parse(self) -> Formula:
        formula = self._iff()
        if self.current.kind != "end":
            raise FormulaSyntaxError(f"Unexpected token {self.current.text!r}", self.current.offset)
        return formula

    def _iff(self) -> Formula:
        formula = self._implies()
        while self._accept("<->"):
            formula = Iff(formula, self._implies())
        return formula

    def _implies(self) -> Formula:
        formula = self._or()
        if self._accept("->"):
            return Implies(formula, self._implies())
        return formula

    def _or(self) -> Formula:
        formula = self._and()
        while self._accept("|"):
            formula = Or(formula, self._and())
        return formula

    def _and(self) -> Formula:
        formula = self._unary()
        while self._accept("&"):
            formula = And(formula, self._unary())
        return formula

    def _unary(self) -> Formula:
        if self._accept("!"):
            return negate(self._unary())
        return self._primary()

    def _primary(self) -> Formula:
        token = self.current
        if token.kind == "atom":
            self.index += 1
            return Atom(token.text)
        if token.kind == "const":
            self.index += 1
            return TOP if token.text == "T" else BOTTOM
        if self._accept("("):
            formula = self._iff()
            if not self._accept(")"):
                raise FormulaSyntaxError("Expected ')'", self.current.offset)
            return formula
        if token.kind == "end":
            raise FormulaSyntaxError("Unexpected end of input", token.offset)
        raise FormulaSyntaxError(f"Unexpected token {token.text!r}", token.offset)


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a formula; double negations are collapsed."""
    if not text or not text.strip():
        raise FormulaSyntaxError("Empty formula", 0)
    return _Parser(text).parse()
