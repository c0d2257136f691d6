"""Text syntax for event expressions.

Atoms are ``P`` or ``S`` followed by two indices ``i < j`` from 0..3
(``P01``, ``S23``). ``&`` binds tighter than ``|``; parentheses group.
Whitespace is ignored. ``describe()`` on a parsed expression produces text
that parses back to the same expression.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from quartx.core.events import EventExpr, EventKind, AtomicEvent, both, either

_TOKEN_RE = re.compile(r"\s*(?:(?P<atom>[PS]\d\d)|(?P<op>[&|()]))")


class ExpressionParseError(ValueError):
    """Raised for malformed event expressions; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class _Token:
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_RE.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ExpressionParseError(f"Unexpected character {text[offset]!r}", offset)
        group = "atom" if match.group("atom") is not None else "op"
        tokens.append(_Token(match.group(group), match.start(group)))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self._tokens = _tokenize(text)
        self._index = 0
        self._end = len(text)

    def _peek(self) -> Optional[_Token]:
        return self._tokens[self._index] if self._index < len(self._tokens) else None

    def _take(self) -> _Token:
        token = self._peek()
        if token is None:
            raise ExpressionParseError("Unexpected end of expression", self._end)
        self._index += 1
        return token

    def parse(self) -> EventExpr:
        expr = self._disjunction()
        leftover = self._peek()
        if leftover is not None:
            raise ExpressionParseError(f"Unexpected {leftover.text!r}", leftover.position)
        return expr

    def _disjunction(self) -> EventExpr:
        operands = [self._conjunction()]
        while (token := self._peek()) is not None and token.text == "|":
            self._take()
            operands.append(self._conjunction())
        return operands[0] if len(operands) == 1 else either(*operands)

    def _conjunction(self) -> EventExpr:
        operands = [self._factor()]
        while (token := self._peek()) is not None and token.text == "&":
            self._take()
            operands.append(self._factor())
        return operands[0] if len(operands) == 1 else both(*operands)

    def _factor(self) -> EventExpr:
        token = self._take()
        if token.text == "(":
            inner = self._disjunction()
            closing = self._take()
            if closing.text != ")":
                raise ExpressionParseError(f"Expected ')', found {closing.text!r}", closing.position)
            return inner
        if token.text in "&|)":
            raise ExpressionParseError(f"Expected an event, found {token.text!r}", token.position)
        return _atom(token)


def _atom(token: _Token) -> AtomicEvent:
    kind = EventKind(token.text[0])
    i, j = int(token.text[1]), int(token.text[2])
    if not (0 <= i < j <= 3):
        raise ExpressionParseError(
            f"Event indices must satisfy 0 <= i < j <= 3, got {token.text!r}", token.position
        )
    return AtomicEvent(kind, i, j)


def parse_expression(text: str) -> EventExpr:
    """Parse ``text`` such as ``"(P01|P23)&(S01|S23)"`` into an event expression."""
    return _Parser(text).parse()


__all__ = ["ExpressionParseError", "parse_expression"]
