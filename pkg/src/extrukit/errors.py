from __future__ import annotations

import enum


class ExtrukitError(Exception):
    pass


class UnknownPrefix(ExtrukitError):
    def __init__(self, label: str):
        super().__init__(f"unknown prefix: {label!r}")
        self.label = label


class ParseErrorKind(str, enum.Enum):
    SYNTAX = "Syntax"
    UNKNOWN_PREFIX = "UnknownPrefix"
    BAD_LITERAL = "BadLiteral"
    UNTERMINATED_STRING = "UnterminatedString"


class ParseError(ExtrukitError):
    """Syntax error at a 1-based line/column position."""

    def __init__(self, kind: ParseErrorKind, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {kind.value}: {message}")
        self.kind = kind
        self.line = max(1, line)
        self.column = max(1, column)
        self.message = message


class MalformedChain(ExtrukitError):
    pass


class ContradictoryAssertion(ExtrukitError):
    pass


class CycleDetected(ExtrukitError):
    pass


class UnknownModule(ExtrukitError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)
