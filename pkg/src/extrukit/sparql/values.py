"""Literal value spaces used by FILTER and ORDER BY."""
from __future__ import annotations

import re
from datetime import datetime, timedelta, timezone
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..terms import XSD, XSD_STRING, BlankNode, Iri, Literal, Term

XSD_DATETIME = XSD + "dateTime"
XSD_BOOLEAN = XSD + "boolean"
EXACT_NUMERIC = {XSD + t for t in (
    "integer", "decimal", "int", "long", "short", "byte", "nonNegativeInteger", "positiveInteger",
    "nonPositiveInteger", "negativeInteger", "unsignedInt", "unsignedLong", "unsignedShort", "unsignedByte")}
FLOAT_NUMERIC = {XSD + "double", XSD + "float"}
NUMERIC = EXACT_NUMERIC | FLOAT_NUMERIC

_DATETIME = re.compile(
    r"(-?\d{4,})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(\.\d+)?(Z|[+-]\d{2}:\d{2})?$")
_DECIMAL = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)$")
_INTEGER = re.compile(r"[+-]?\d+$")


class ExprError(Exception):
    """A type error while evaluating an expression; makes a FILTER false."""


Number = Union[Fraction, float]


def parse_datetime(lexical: str) -> datetime:
    """Parse an xsd:dateTime lexical form to an aware UTC datetime.

    Timestamps without an offset are taken to be UTC.
    """
    m = _DATETIME.match(lexical.strip())
    if not m:
        raise ExprError(f"not a dateTime: {lexical!r}")
    year, month, day, hour, minute, second = (int(g) for g in m.groups()[:6])
    frac, zone = m.group(7), m.group(8)
    micro = int(round(float(frac) * 1_000_000)) if frac else 0
    extra = timedelta(0)
    if hour == 24 and minute == 0 and second == 0 and micro == 0:
        hour, extra = 0, timedelta(days=1)
    if micro >= 1_000_000:
        micro, extra = micro - 1_000_000, extra + timedelta(seconds=1)
    tz = timezone.utc
    if zone and zone != "Z":
        sign = 1 if zone[0] == "+" else -1
        tz = timezone(sign * timedelta(hours=int(zone[1:3]), minutes=int(zone[4:6])))
    try:
        value = datetime(year, month, day, hour, minute, second, micro, tzinfo=tz) + extra
    except ValueError as exc:
        raise ExprError(str(exc)) from exc
    return value.astimezone(timezone.utc)


def numeric_value(lit: Literal) -> Number:
    lex = lit.lexical.strip()
    if lit.datatype in FLOAT_NUMERIC:
        try:
            return float(lex)
        except ValueError as exc:
            raise ExprError(f"bad double {lex!r}") from exc
    pattern = _INTEGER if lit.datatype != XSD + "decimal" else _DECIMAL
    if not pattern.match(lex):
        raise ExprError(f"bad numeric literal {lex!r}")
    return Fraction(lex)


def boolean_value(lit: Literal) -> bool:
    if lit.lexical in ("true", "1"):
        return True
    if lit.lexical in ("false", "0"):
        return False
    raise ExprError(f"bad boolean {lit.lexical!r}")


def is_numeric(term: Term) -> bool:
    return isinstance(term, Literal) and term.datatype in NUMERIC


def compare_key(term: Term) -> Tuple[str, object]:
    """Return (kind, value) for comparing two terms with < and >."""
    if isinstance(term, Literal):
        if term.datatype in FLOAT_NUMERIC:
            return "float", numeric_value(term)
        if term.datatype in EXACT_NUMERIC:
            return "exact", numeric_value(term)
        if term.datatype == XSD_DATETIME:
            return "dateTime", parse_datetime(term.lexical)
        if term.datatype == XSD_BOOLEAN:
            return "boolean", boolean_value(term)
        if term.datatype == XSD_STRING:
            return "string", term.lexical
        if term.language is not None:
            return "lang:" + term.language, term.lexical
    raise ExprError(f"no ordering for {term}")


def compare(op: str, left: Term, right: Term) -> bool:
    if op in ("=", "!=") and not (isinstance(left, Literal) and isinstance(right, Literal)):
        return (left == right) == (op == "=")
    try:
        lk, lv = compare_key(left)
        rk, rv = compare_key(right)
    except ExprError:
        if op in ("=", "!="):
            # unknown datatypes: only term identity is decidable
            if left == right:
                return op == "="
        raise
    if lk != rk:
        if {lk, rk} == {"float", "exact"}:
            lv, rv = float(lv), float(rv)
        elif op in ("=", "!="):
            return op == "!="
        else:
            raise ExprError(f"cannot compare {lk} with {rk}")
    return {
        "=": lv == rv, "!=": lv != rv, "<": lv < rv,
        "<=": lv <= rv, ">": lv > rv, ">=": lv >= rv,
    }[op]


def effective_boolean(term: Term) -> bool:
    if isinstance(term, Literal):
        if term.datatype == XSD_BOOLEAN:
            return boolean_value(term)
        if term.datatype in NUMERIC:
            return numeric_value(term) != 0
        if term.datatype == XSD_STRING or term.language is not None:
            return term.lexical != ""
    raise ExprError(f"no boolean value for {term}")


def cast(datatype: str, term: Term) -> Literal:
    if not isinstance(term, Literal):
        if datatype == XSD_STRING and isinstance(term, Iri):
            return Literal(term.value)
        raise ExprError(f"cannot cast {term}")
    lex = term.lexical.strip()
    if datatype == XSD_DATETIME:
        parse_datetime(lex)
    elif datatype in FLOAT_NUMERIC:
        try:
            float(lex)
        except ValueError as exc:
            raise ExprError(str(exc)) from exc
    elif datatype == XSD + "integer":
        if not _INTEGER.match(lex):
            raise ExprError(f"cannot cast {lex!r} to integer")
    elif datatype == XSD + "decimal":
        if not _DECIMAL.match(lex):
            raise ExprError(f"cannot cast {lex!r} to decimal")
    elif datatype == XSD_BOOLEAN:
        boolean_value(term)
    elif datatype != XSD_STRING:
        raise ExprError(f"unsupported cast to {datatype}")
    return Literal(lex if datatype != XSD_STRING else term.lexical, datatype)


def order_key(term: Optional[Term]):
    """Total order used by ORDER BY.

    Unbound < blank nodes < IRIs < numbers < dateTimes < other literals;
    numbers compare numerically and dateTimes chronologically (in UTC).
    """
    if term is None:
        return (0,)
    if isinstance(term, BlankNode):
        return (1, term.label)
    if isinstance(term, Iri):
        return (2, term.value)
    try:
        kind, value = compare_key(term)
    except ExprError:
        kind, value = "", None
    if kind in ("float", "exact"):
        return (3, float(value) if kind == "float" else value, term.lexical)
    if kind == "dateTime":
        return (4, value, term.lexical)
    return (5, term.datatype, term.language or "", term.lexical)
