"""Recursive-descent parser for the supported SPARQL subset."""
from __future__ import annotations

from typing import Dict, List, Optional

from .._lexer import Token, TokenStream, tokenize, unescape
from ..errors import ParseError, ParseErrorKind
from ..terms import RDF_TYPE, XSD, Iri, Literal
from ..turtle import XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER
from .ast import (Cast, Compare, Const, Expr, Filter, GroupPattern, Logical, Not, OrderCondition, Query,
                  TriplePattern, Union_, Var)

_COMPARISONS = ("=", "!=", "<", "<=", ">", ">=")
_CASTABLE = {"dateTime", "integer", "decimal", "double", "float", "string", "boolean"}


def parse_query(text: str) -> Query:
    return _Parser(text).query()


class _Parser:
    def __init__(self, text: str):
        self.ts = TokenStream(tokenize(text, sparql=True))
        self.prefixes: Dict[str, str] = {}
        self.base: Optional[str] = None
        self._bnodes = 0

    # prologue -----------------------------------------------------------
    def query(self) -> Query:
        ts = self.ts
        while True:
            if ts.at_word("PREFIX"):
                ts.next()
                label = ts.expect("PNAME")
                if not label.value.endswith(":"):
                    raise ts.error("prefix label must end with ':'", label)
                iri = ts.expect("IRIREF")
                self.prefixes[label.value[:-1]] = self._resolve(iri.value[1:-1])
            elif ts.at_word("BASE"):
                ts.next()
                self.base = ts.expect("IRIREF").value[1:-1]
            else:
                break

        if ts.at_word("SELECT"):
            ts.next()
            distinct = False
            if ts.at_word("DISTINCT"):
                ts.next()
                distinct = True
            projection: Optional[List[Var]] = None
            if ts.accept("OP", "*"):
                projection = None
            else:
                projection = []
                while ts.at("VAR"):
                    projection.append(Var(ts.next().value[1:]))
                if not projection:
                    raise ts.error("SELECT needs variables or '*'")
            if ts.at_word("WHERE"):
                ts.next()
            pattern = self.group()
            q = Query("SELECT", pattern, dict(self.prefixes), projection, distinct)
        elif ts.at_word("ASK"):
            ts.next()
            if ts.at_word("WHERE"):
                ts.next()
            q = Query("ASK", self.group(), dict(self.prefixes))
        else:
            raise ts.error("expected SELECT or ASK")

        if ts.at_word("ORDER"):
            ts.next()
            if not ts.at_word("BY"):
                raise ts.error("expected BY after ORDER")
            ts.next()
            while True:
                cond = self.order_condition()
                if cond is None:
                    break
                q.order_by.append(cond)
            if not q.order_by:
                raise ts.error("ORDER BY needs at least one condition")
        if ts.at_word("LIMIT"):
            ts.next()
            q.limit = int(ts.expect("INTEGER").value)
        if not ts.at("EOF"):
            raise ts.error(f"unexpected {ts.peek().value!r} after query")

        if q.projection is not None:
            present = set(q.pattern.variables())
            q.unbound_projection = tuple(v for v in q.projection if v not in present)
        return q

    def order_condition(self) -> Optional[OrderCondition]:
        ts = self.ts
        if ts.at("VAR"):
            return OrderCondition(Var(ts.next().value[1:]))
        for word, desc in (("ASC", False), ("DESC", True)):
            if ts.at_word(word):
                ts.next()
                ts.expect("PUNCT", "(")
                expr = self.expression()
                ts.expect("PUNCT", ")")
                return OrderCondition(expr, desc)
        if ts.at("PUNCT", "("):
            ts.next()
            expr = self.expression()
            ts.expect("PUNCT", ")")
            return OrderCondition(expr)
        return None

    # patterns -------------------------------------------------------------
    def group(self) -> GroupPattern:
        ts = self.ts
        open_tok = ts.expect("PUNCT", "{")
        group = GroupPattern()
        while not ts.at("PUNCT", "}"):
            if ts.at("EOF"):
                raise ts.error("unterminated group pattern")
            if ts.at("PUNCT", "{"):
                branches = [self.group()]
                while ts.at_word("UNION"):
                    ts.next()
                    branches.append(self.group())
                group.elements.append(Union_(branches) if len(branches) > 1 else branches[0])
                ts.accept("PUNCT", ".")
            elif ts.at_word("FILTER"):
                ts.next()
                group.elements.append(Filter(self.bracketted()))
                ts.accept("PUNCT", ".")
            else:
                self.triples_same_subject(group)
                if not ts.accept("PUNCT", "."):
                    if not ts.at("PUNCT", "}") and not ts.at("PUNCT", "{") and not ts.at_word("FILTER"):
                        raise ts.error(f"expected '.' or '}}', got {ts.peek().value!r}")
        ts.expect("PUNCT", "}")
        if not any(not isinstance(el, Filter) for el in group.elements):
            raise ParseError(ParseErrorKind.SYNTAX, open_tok.line, open_tok.column, "empty group pattern")
        return group

    def triples_same_subject(self, group: GroupPattern) -> None:
        ts = self.ts
        if ts.at("PUNCT", "["):
            subject = self.blank_node_property_list(group)
            if ts.at("PUNCT", ".") or ts.at("PUNCT", "}"):
                return
        else:
            subject = self.var_or_term()
        self.property_list(subject, group)

    def property_list(self, subject, group: GroupPattern) -> None:
        ts = self.ts
        while True:
            predicate = self.verb()
            while True:
                obj = self.blank_node_property_list(group) if ts.at("PUNCT", "[") else self.var_or_term()
                group.elements.append(TriplePattern(subject, predicate, obj))
                if not ts.accept("PUNCT", ","):
                    break
            if not ts.accept("PUNCT", ";"):
                return
            while ts.accept("PUNCT", ";"):
                pass
            if ts.at("PUNCT", ".") or ts.at("PUNCT", "}") or ts.at("PUNCT", "]"):
                return

    def blank_node_property_list(self, group: GroupPattern):
        ts = self.ts
        ts.expect("PUNCT", "[")
        node = self._fresh_bnode()
        if not ts.accept("PUNCT", "]"):
            self.property_list(node, group)
            ts.expect("PUNCT", "]")
        return node

    def verb(self):
        ts = self.ts
        tok = ts.peek()
        if tok.kind == "NAME" and tok.value == "a":
            ts.next()
            return RDF_TYPE
        if tok.kind == "VAR":
            ts.next()
            return Var(tok.value[1:])
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(ts.next())
        raise ts.error(f"expected predicate, got {tok.value!r}")

    def var_or_term(self):
        ts = self.ts
        tok = ts.peek()
        if tok.kind == "VAR":
            ts.next()
            return Var(tok.value[1:])
        if tok.kind == "BNODE":
            ts.next()
            return Var("#" + tok.value[2:])
        term = self.term()
        if term is None:
            raise ts.error(f"expected term, got {tok.value or tok.kind!r}")
        return term

    def term(self):
        """IRI, prefixed name or literal; None if the next token is none of those."""
        ts = self.ts
        tok = ts.peek()
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(ts.next())
        if tok.kind == "STRING":
            ts.next()
            lexical = unescape(tok.value[1:-1], tok)
            if ts.at("LANGTAG"):
                return Literal(lexical, language=ts.next().value[1:].lower())
            if ts.accept("DTYPE"):
                dt_tok = ts.next()
                if dt_tok.kind not in ("IRIREF", "PNAME"):
                    raise ts.error("expected datatype IRI", dt_tok)
                return Literal(lexical, self.iri(dt_tok).value)
            return Literal(lexical)
        if tok.kind in ("INTEGER", "DECIMAL", "DOUBLE"):
            ts.next()
            dt = {"INTEGER": XSD_INTEGER, "DECIMAL": XSD_DECIMAL, "DOUBLE": XSD_DOUBLE}[tok.kind]
            return Literal(tok.value, dt)
        if tok.kind == "NAME" and tok.value in ("true", "false"):
            ts.next()
            return Literal(tok.value, XSD_BOOLEAN)
        return None

    def iri(self, tok: Token) -> Iri:
        if tok.kind == "IRIREF":
            return Iri(self._resolve(tok.value[1:-1]))
        label, _, local = tok.value.partition(":")
        if label not in self.prefixes:
            raise ParseError(ParseErrorKind.UNKNOWN_PREFIX, tok.line, tok.column, f"unknown prefix {label!r}")
        return Iri(self.prefixes[label] + local.replace("\\", ""))

    def _resolve(self, value: str) -> str:
        if self.base and ":" not in value:
            return self.base + value
        return value

    def _fresh_bnode(self) -> Var:
        self._bnodes += 1
        return Var(f"#anon{self._bnodes}")

    # expressions ---------------------------------------------------------
    def bracketted(self) -> Expr:
        ts = self.ts
        ts.expect("PUNCT", "(")
        expr = self.expression()
        ts.expect("PUNCT", ")")
        return expr

    def expression(self) -> Expr:
        left = self.conjunction()
        while self.ts.accept("OP", "||"):
            left = Logical("||", left, self.conjunction())
        return left

    def conjunction(self) -> Expr:
        left = self.relational()
        while self.ts.accept("OP", "&&"):
            left = Logical("&&", left, self.relational())
        return left

    def relational(self) -> Expr:
        left = self.unary()
        tok = self.ts.peek()
        if tok.kind == "OP" and tok.value in _COMPARISONS:
            self.ts.next()
            return Compare(tok.value, left, self.unary())
        return left

    def unary(self) -> Expr:
        ts = self.ts
        if ts.accept("OP", "!"):
            return Not(self.unary())
        if ts.at("PUNCT", "("):
            return self.bracketted()
        tok = ts.peek()
        if tok.kind == "VAR":
            ts.next()
            return Var(tok.value[1:])
        if tok.kind in ("IRIREF", "PNAME") and ts.peek(1).kind == "PUNCT" and ts.peek(1).value == "(":
            fn = self.iri(ts.next())
            if not fn.value.startswith(XSD) or fn.value[len(XSD):] not in _CASTABLE:
                raise ts.error(f"unsupported function {fn.value}", tok)
            ts.expect("PUNCT", "(")
            arg = self.expression()
            ts.expect("PUNCT", ")")
            return Cast(fn, arg)
        term = self.term()
        if term is None:
            raise ts.error(f"expected expression, got {tok.value or tok.kind!r}")
        return Const(term)

