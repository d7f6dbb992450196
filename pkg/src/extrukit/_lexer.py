"""Tokenizer shared by the Turtle and SPARQL parsers."""
from __future__ import annotations

import bisect
import re
from dataclasses import dataclass
from typing import Iterator, List

from .errors import ParseError, ParseErrorKind

_PN_CHARS_BASE = r"A-Za-zÀ-ÖØ-öø-˿Ͱ-ͽͿ-῿‌-‍⁰-↏Ⰰ-⿯、-퟿豈-﷏ﷰ-�"
_PN_CHARS = _PN_CHARS_BASE + r"_0-9\-·̀-ͯ‿-⁀"
_PREFIX = rf"(?:[{_PN_CHARS_BASE}](?:[{_PN_CHARS}.]*[{_PN_CHARS}])?)?"
_LOCAL = rf"(?:[{_PN_CHARS_BASE}_:0-9]|%[0-9A-Fa-f]{{2}})(?:(?:[{_PN_CHARS}.:]|%[0-9A-Fa-f]{{2}})*(?:[{_PN_CHARS}:]|%[0-9A-Fa-f]{{2}}))?"

PN_LOCAL = re.compile(_LOCAL)

_COMMON = [
    ("WS", r"[ \t\r\n]+"),
    ("COMMENT", r"#[^\n]*"),
    ("LONGSTRING", r'"""|\'\'\''),
    ("STRING", r'"(?:[^"\\\n\r]|\\.)*"|\'(?:[^\'\\\n\r]|\\.)*\''),
    ("OPENSTRING", r'["\']'),
    ("IRIREF", r'<[^<>"{}|^`\\\x00-\x20]*>'),
    ("BNODE", rf"_:[{_PN_CHARS_BASE}_0-9](?:[{_PN_CHARS}.]*[{_PN_CHARS}])?"),
    ("PNAME", rf"{_PREFIX}:(?:{_LOCAL})?"),
    ("DOUBLE", r"[+-]?(?:\d+\.\d*[eE][+-]?\d+|\.\d+[eE][+-]?\d+|\d+[eE][+-]?\d+)"),
    ("DECIMAL", r"[+-]?\d*\.\d+"),
    ("INTEGER", r"[+-]?\d+"),
    ("DIRECTIVE", r"@(?:prefix|base)\b"),
    ("LANGTAG", r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*"),
    ("DTYPE", r"\^\^"),
]
_SPARQL_ONLY = [
    ("VAR", r"[?$][A-Za-z_0-9·À-�]+"),
    ("OP", r"&&|\|\||!=|<=|>=|[<>=!*+\-/]"),
]
_TAIL = [
    ("NAME", r"[A-Za-z_][A-Za-z_0-9]*"),
    ("PUNCT", r"[.;,\[\]\(\){}]"),
]


def _compile(spec):
    return re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in spec))


_TURTLE_RE = _compile(_COMMON + _TAIL)
_SPARQL_RE = _compile(_COMMON + _SPARQL_ONLY + _TAIL)


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


class _Positions:
    def __init__(self, text: str):
        self.starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def __call__(self, offset: int):
        line = bisect.bisect_right(self.starts, offset)
        return line, offset - self.starts[line - 1] + 1


def tokenize(text: str, sparql: bool = False) -> List[Token]:
    pattern = _SPARQL_RE if sparql else _TURTLE_RE
    pos = _Positions(text)
    out: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        m = pattern.match(text, i)
        if m is None:
            line, col = pos(i)
            raise ParseError(ParseErrorKind.SYNTAX, line, col, f"unexpected character {text[i]!r}")
        kind = m.lastgroup
        value = m.group()
        if kind == "OPENSTRING":
            line, col = pos(i)
            raise ParseError(ParseErrorKind.UNTERMINATED_STRING, line, col, "string not closed before end of line")
        if kind == "LONGSTRING":
            line, col = pos(i)
            raise ParseError(ParseErrorKind.SYNTAX, line, col, "long (triple-quoted) strings are not supported")
        if kind not in ("WS", "COMMENT"):
            line, col = pos(i)
            out.append(Token(kind, value, line, col))
        i = m.end()
    end_line, end_col = pos(n)
    out.append(Token("EOF", "", end_line, end_col))
    return out


_SIMPLE_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


def unescape(body: str, token: Token) -> str:
    """Decode ECHAR and UCHAR escapes inside a string token body."""
    if "\\" not in body:
        return body
    out = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        nxt = body[i + 1] if i + 1 < len(body) else ""
        if nxt in _SIMPLE_ESCAPES:
            out.append(_SIMPLE_ESCAPES[nxt])
            i += 2
        elif nxt in ("u", "U"):
            width = 4 if nxt == "u" else 8
            digits = body[i + 2:i + 2 + width]
            if len(digits) != width or not all(c in "0123456789abcdefABCDEF" for c in digits):
                raise ParseError(ParseErrorKind.BAD_LITERAL, token.line, token.column, "bad unicode escape")
            out.append(chr(int(digits, 16)))
            i += 2 + width
        else:
            raise ParseError(ParseErrorKind.BAD_LITERAL, token.line, token.column, f"bad escape \\{nxt}")
    return "".join(out)


class TokenStream:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def at(self, kind: str, value: str | None = None) -> bool:
        tok = self.peek()
        return tok.kind == kind and (value is None or tok.value == value)

    def at_word(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == "NAME" and tok.value.lower() == word.lower()

    def accept(self, kind: str, value: str | None = None) -> Token | None:
        if self.at(kind, value):
            return self.next()
        return None

    def expect(self, kind: str, value: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (value is not None and tok.value != value):
            wanted = value if value is not None else kind
            got = tok.value or tok.kind
            raise ParseError(ParseErrorKind.SYNTAX, tok.line, tok.column, f"expected {wanted!r}, got {got!r}")
        return self.next()

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(ParseErrorKind.SYNTAX, tok.line, tok.column, message)


def iter_kinds(tokens: List[Token]) -> Iterator[str]:
    return (t.kind for t in tokens)
