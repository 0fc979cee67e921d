"""Recursive-descent parser for the formula grammar.

Precedence, loosest first: ``<->``, ``->`` (right associative), ``|``, ``&``, the binary
temporal operators ``U``/``R`` (right associative) and finally the prefix operators ``!``,
``X``, ``F``, ``G``. Conjunctions and disjunctions associate to the right, so ``a & b & c``
becomes ``a & (b & c)``.
"""

import re
from dataclasses import dataclass

from ..core.exceptions import FormulaSyntaxError, UnknownProposition
from .alphabet import Alphabet
from .formula import (
    FALSE,
    TRUE,
    Formula,
    always,
    conj,
    disj,
    eventually,
    iff,
    lit,
    nxt,
    release,
    to_debug_text,
    until,
)

_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|&&|\|\||[!&|()~])|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<bad>\S))"
)
_KEYWORDS = {"X", "F", "G", "U", "R", "tt", "ff", "true", "false"}


@dataclass(frozen=True)
class _Token:
    text: str
    pos: int


# AST nodes are plain tuples: (kind, *operands); leaves carry the source position.
_Node = tuple[object, ...]


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        if match.group("bad") is not None:
            bad = match.group("bad")
            raise FormulaSyntaxError(f"Unexpected character {bad!r}", match.start("bad"))
        kind = "op" if match.group("op") is not None else "word"
        value = match.group(kind)
        if value in ("&&", "||", "~"):
            value = {"&&": "&", "||": "|", "~": "!"}[value]
        tokens.append(_Token(value, match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def advance(self) -> _Token:
        token = self.peek()
        if token is None:
            raise FormulaSyntaxError("Unexpected end of input", len(self.text))
        self.index += 1
        return token

    def accept(self, text: str) -> bool:
        token = self.peek()
        if token is not None and token.text == text:
            self.index += 1
            return True
        return False

    def parse(self) -> _Node:
        if not self.tokens:
            raise FormulaSyntaxError("Empty formula", 0)
        node = self.parse_iff()
        token = self.peek()
        if token is not None:
            raise FormulaSyntaxError(f"Unexpected token {token.text!r}", token.pos)
        return node

    def parse_iff(self) -> _Node:
        node = self.parse_implies()
        while self.accept("<->"):
            node = ("iff", node, self.parse_implies())
        return node

    def parse_implies(self) -> _Node:
        node = self.parse_or()
        if self.accept("->"):
            return ("or", ("not", node), self.parse_implies())
        return node

    def parse_or(self) -> _Node:
        node = self.parse_and()
        if self.accept("|"):
            return ("or", node, self.parse_or())
        return node

    def parse_and(self) -> _Node:
        node = self.parse_binary_temporal()
        if self.accept("&"):
            return ("and", node, self.parse_and())
        return node

    def parse_binary_temporal(self) -> _Node:
        node = self.parse_unary()
        for op in ("U", "R"):
            if self.accept(op):
                return (op, node, self.parse_binary_temporal())
        return node

    def parse_unary(self) -> _Node:
        token = self.advance()
        if token.text == "!":
            return ("not", self.parse_unary())
        if token.text in ("X", "F", "G"):
            return (token.text, self.parse_unary())
        if token.text == "(":
            node = self.parse_iff()
            closing = self.peek()
            if not self.accept(")"):
                pos = closing.pos if closing is not None else len(self.text)
                raise FormulaSyntaxError("Expected ')'", pos)
            return node
        if token.text in ("tt", "true"):
            return ("const", True)
        if token.text in ("ff", "false"):
            return ("const", False)
        if token.text in _KEYWORDS or not token.text[0].isalpha() and token.text[0] != "_":
            raise FormulaSyntaxError(f"Unexpected token {token.text!r}", token.pos)
        return ("ap", token.text, token.pos)


def _lower(node: _Node, alphabet: Alphabet, negated: bool, temporal: bool) -> Formula:
    kind = node[0]
    if kind == "const":
        return TRUE if bool(node[1]) != negated else FALSE
    if kind == "ap":
        name, pos = str(node[1]), int(str(node[2]))
        try:
            prop = alphabet.index(name)
        except KeyError:
            raise UnknownProposition(name, pos) from None
        return lit(prop, not negated)
    if kind == "not":
        return _lower(node[1], alphabet, not negated, temporal)  # type: ignore[arg-type]
    children: tuple[_Node, ...] = node[1:]  # type: ignore[assignment]
    if kind in ("and", "or"):
        parts = [_lower(c, alphabet, negated, temporal) for c in children]
        return conj(*parts) if (kind == "and") != negated else disj(*parts)
    if kind == "iff":
        left, right = children
        if temporal:
            expanded = ("or", ("and", left, right), ("and", ("not", left), ("not", right)))
            return _lower(expanded, alphabet, negated, temporal)
        return iff(
            _lower(left, alphabet, False, False), _lower(right, alphabet, negated, False)
        )
    if kind == "X":
        return nxt(_lower(children[0], alphabet, negated, True))
    if kind in ("F", "G"):
        body = _lower(children[0], alphabet, negated, True)
        return eventually(body) if (kind == "F") != negated else always(body)
    left_f = _lower(children[0], alphabet, negated, True)
    right_f = _lower(children[1], alphabet, negated, True)
    return until(left_f, right_f) if (kind == "U") != negated else release(left_f, right_f)


def parse(text: str, alphabet: Alphabet) -> Formula:
    """Parse formula text over ``alphabet``.

    Negations are pushed to the literals, ``->`` is eliminated and ``F``/``G`` are desugared.
    A bi-implication below a temporal operator is expanded into its disjunctive form.

    Args:
        text: Formula text.
        alphabet: The input/output partition naming every proposition.

    Returns:
        The parsed formula.

    Raises:
        FormulaSyntaxError: On malformed input, with the offending position.
        UnknownProposition: When a name is not part of the alphabet.
    """
    return _lower(_Parser(text).parse(), alphabet, negated=False, temporal=False)


def to_text(f: Formula, alphabet: Alphabet) -> str:
    """Render ``f`` in the grammar accepted by :func:`parse`."""
    return to_debug_text(f, alphabet.names)
