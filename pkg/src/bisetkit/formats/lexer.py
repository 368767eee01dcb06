"""
Statement structure shared by all text formats.

A file is a list of statements. A statement ends at a newline or ``;`` and
may end with a ``{ ... }`` block holding nested statements; ``#`` starts a
comment. Tokens are separated by whitespace, so statements keep their raw
text for values such as ``<1, t>(1 2)`` that contain spaces.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import ParseError

TOKEN_RE = re.compile(r"[{};]|[^\s{};#]+")


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int
    offset: int


@dataclass
class Statement:
    tokens: list[Token]
    source: str
    text: str
    block: list[Statement] | None = None
    end: int = 0

    @property
    def keyword(self) -> str:
        return self.tokens[0].text

    @property
    def line(self) -> int:
        return self.tokens[0].line

    def error(self, message: str, index: int = 0) -> ParseError:
        token = self.tokens[min(index, len(self.tokens) - 1)]
        return ParseError(message, token.line, token.column, self.source)

    def rest(self, index: int) -> str:
        """Raw text from token ``index`` to the end of the statement head."""
        if index >= len(self.tokens):
            return ""
        return self.text[self.tokens[index].offset : self.end].strip()

    def words(self, start: int = 0) -> list[str]:
        return [t.text for t in self.tokens[start:]]

    def expect(self, index: int, what: str) -> str:
        if index >= len(self.tokens):
            raise self.error(f"Missing {what}", len(self.tokens) - 1)
        return self.tokens[index].text


@dataclass
class _Frame:
    statements: list[Statement] = field(default_factory=list)
    opener: Token | None = None


def _tokens(text: str) -> list[Token]:
    tokens = []
    offset = 0
    for line_number, line in enumerate(text.split("\n"), start=1):
        code = line.split("#", 1)[0]
        for match in TOKEN_RE.finditer(code):
            start = match.start()
            tokens.append(Token(match.group(), line_number, start + 1, offset + start))
        tokens.append(Token("\n", line_number, len(code) + 1, offset + len(code)))
        offset += len(line) + 1
    return tokens


def parse_statements(text: str, source: str = "<string>") -> list[Statement]:
    """Split ``text`` into nested statements.

    Raises:
        ParseError: on unbalanced braces.
    """
    stack = [_Frame()]
    current: list[Token] = []

    def flush(end: int) -> Statement | None:
        nonlocal current
        if not current:
            return None
        statement = Statement(list(current), source, text, end=end)
        stack[-1].statements.append(statement)
        current = []
        return statement

    for token in _tokens(text):
        if token.text in ("\n", ";"):
            flush(token.offset)
        elif token.text == "{":
            statement = flush(token.offset)
            if statement is None:
                raise ParseError("Block without a statement", token.line, token.column, source)
            statement.block = []
            stack.append(_Frame(statement.block, token))
        elif token.text == "}":
            flush(token.offset)
            if len(stack) == 1:
                raise ParseError("Unmatched '}'", token.line, token.column, source)
            stack.pop()
        else:
            current.append(token)
    if len(stack) > 1:
        opener = stack[-1].opener
        assert opener is not None
        raise ParseError("Unclosed '{'", opener.line, opener.column, source)
    return stack[0].statements
