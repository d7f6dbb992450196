"""Reader and writer for the Turtle subset used by the shipped fixtures.

Supported: ``@prefix``/``PREFIX``, one optional ``@base``, the ``a`` keyword,
``;`` and ``,`` lists, IRIs, prefixed names, single-line string literals with
``^^`` datatypes or ``@`` language tags, integer/decimal/double/boolean
shorthand, ``[ ... ]`` and ``_:x`` blank nodes, and ``( ... )`` collections.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from typing import Dict, List, Optional, Set, Tuple
from urllib.parse import urljoin

from ._lexer import PN_LOCAL, Token, TokenStream, tokenize, unescape
from .errors import ParseError, ParseErrorKind
from .graph import Graph
from .terms import (RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, XSD, XSD_STRING, BlankNode, Iri, Literal,
                    Term, Triple, escape_string)

XSD_INTEGER = XSD + "integer"
XSD_DECIMAL = XSD + "decimal"
XSD_DOUBLE = XSD + "double"
XSD_BOOLEAN = XSD + "boolean"

_PLACEHOLDER = "\x00"


class _TurtleParser:
    def __init__(self, text: str):
        self.ts = TokenStream(tokenize(text))
        self.prefixes: Dict[str, str] = {}
        self.base: Optional[str] = None
        self.triples: List[Triple] = []
        self.labels: Dict[str, BlankNode] = {}
        self.generated = 0

    def fresh(self) -> BlankNode:
        self.generated += 1
        return BlankNode(f"{_PLACEHOLDER}{self.generated}")

    def parse(self) -> Graph:
        ts = self.ts
        while not ts.at("EOF"):
            if ts.at("DIRECTIVE"):
                self.directive(ts.next().value[1:], terminated=True)
            elif ts.at_word("prefix") or ts.at_word("base"):
                self.directive(ts.next().value.lower(), terminated=False)
            else:
                self.triples_statement()
                ts.expect("PUNCT", ".")
        return self.finish()

    def directive(self, name: str, terminated: bool) -> None:
        ts = self.ts
        if name == "prefix":
            tok = ts.expect("PNAME")
            if not tok.value.endswith(":"):
                raise ts.error("prefix declaration needs 'label:'", tok)
            self.prefixes[tok.value[:-1]] = self.iri_ref(ts.expect("IRIREF")).value
        else:
            tok = ts.peek()
            if self.base is not None:
                raise ts.error("only a single base declaration is supported", tok)
            self.base = self.iri_ref(ts.expect("IRIREF")).value
        if terminated:
            ts.expect("PUNCT", ".")

    def triples_statement(self) -> None:
        ts = self.ts
        if ts.at("PUNCT", "["):
            subject = self.blank_node_property_list()
            if ts.at("PUNCT", "."):
                return
            self.predicate_object_list(subject)
            return
        subject = self.subject()
        self.predicate_object_list(subject)

    def subject(self) -> Term:
        ts = self.ts
        tok = ts.peek()
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(ts.next())
        if tok.kind == "BNODE":
            return self.labeled(ts.next())
        if ts.at("PUNCT", "("):
            return self.collection()
        raise ts.error(f"expected subject, got {tok.value or tok.kind!r}")

    def predicate_object_list(self, subject: Term) -> None:
        ts = self.ts
        while True:
            predicate = self.verb()
            self.object_list(subject, predicate)
            if not ts.accept("PUNCT", ";"):
                return
            while ts.accept("PUNCT", ";"):
                pass
            if ts.at("PUNCT", ".") or ts.at("PUNCT", "]"):
                return

    def verb(self) -> Iri:
        ts = self.ts
        tok = ts.peek()
        if tok.kind == "NAME" and tok.value == "a":
            ts.next()
            return RDF_TYPE
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(ts.next())
        raise ts.error(f"expected predicate, got {tok.value or tok.kind!r}")

    def object_list(self, subject: Term, predicate: Iri) -> None:
        while True:
            obj = self.object()
            self.triples.append(Triple(subject, predicate, obj))
            if not self.ts.accept("PUNCT", ","):
                return

    def object(self) -> Term:
        ts = self.ts
        tok = ts.peek()
        if tok.kind in ("IRIREF", "PNAME"):
            return self.iri(ts.next())
        if tok.kind == "BNODE":
            return self.labeled(ts.next())
        if ts.at("PUNCT", "["):
            return self.blank_node_property_list()
        if ts.at("PUNCT", "("):
            return self.collection()
        return self.literal()

    def blank_node_property_list(self) -> BlankNode:
        ts = self.ts
        ts.expect("PUNCT", "[")
        node = self.fresh()
        if not ts.at("PUNCT", "]"):
            self.predicate_object_list(node)
        ts.expect("PUNCT", "]")
        return node

    def collection(self) -> Term:
        ts = self.ts
        ts.expect("PUNCT", "(")
        items: List[Term] = []
        while not ts.accept("PUNCT", ")"):
            if ts.at("EOF"):
                raise ts.error("unterminated collection")
            items.append(self.object())
        if not items:
            return RDF_NIL
        nodes = [self.fresh() for _ in items]
        for idx, (node, item) in enumerate(zip(nodes, items)):
            self.triples.append(Triple(node, RDF_FIRST, item))
            rest = nodes[idx + 1] if idx + 1 < len(nodes) else RDF_NIL
            self.triples.append(Triple(node, RDF_REST, rest))
        return nodes[0]

    def literal(self) -> Literal:
        ts = self.ts
        tok = ts.next()
        if tok.kind == "STRING":
            lexical = unescape(tok.value[1:-1], tok)
            if ts.at("LANGTAG"):
                return Literal(lexical, language=ts.next().value[1:].lower())
            if ts.accept("DTYPE"):
                dt_tok = ts.next()
                if dt_tok.kind not in ("IRIREF", "PNAME"):
                    raise ParseError(ParseErrorKind.BAD_LITERAL, dt_tok.line, dt_tok.column,
                                     "datatype must be an IRI")
                return Literal(lexical, self.iri(dt_tok).value)
            return Literal(lexical)
        if tok.kind == "INTEGER":
            return Literal(tok.value, XSD_INTEGER)
        if tok.kind == "DECIMAL":
            return Literal(tok.value, XSD_DECIMAL)
        if tok.kind == "DOUBLE":
            return Literal(tok.value, XSD_DOUBLE)
        if tok.kind == "NAME" and tok.value in ("true", "false"):
            return Literal(tok.value, XSD_BOOLEAN)
        if tok.kind == "LANGTAG":
            raise ParseError(ParseErrorKind.BAD_LITERAL, tok.line, tok.column, "language tag without string")
        raise ts.error(f"expected object, got {tok.value or tok.kind!r}", tok)

    def iri_ref(self, tok: Token) -> Iri:
        value = unescape(tok.value[1:-1], tok)
        if self.base is not None and ":" not in value.split("/", 1)[0]:
            value = urljoin(self.base, value)
        try:
            return Iri(value)
        except ValueError as exc:
            raise ParseError(ParseErrorKind.SYNTAX, tok.line, tok.column, str(exc)) from None

    def iri(self, tok: Token) -> Iri:
        if tok.kind == "IRIREF":
            return self.iri_ref(tok)
        label, _, local = tok.value.partition(":")
        if label not in self.prefixes:
            raise ParseError(ParseErrorKind.UNKNOWN_PREFIX, tok.line, tok.column, f"unknown prefix {label!r}")
        return Iri(self.prefixes[label] + _unescape_local(local))

    def labeled(self, tok: Token) -> BlankNode:
        label = tok.value[2:]
        node = self.labels.get(label)
        if node is None:
            node = self.labels[label] = BlankNode(label)
        return node

    def finish(self) -> Graph:
        # Anonymous nodes get the first "bN" labels not used by the document.
        used = set(self.labels)
        rename: Dict[BlankNode, BlankNode] = {}
        counter = 0
        for idx in range(1, self.generated + 1):
            while f"b{counter}" in used:
                counter += 1
            rename[BlankNode(f"{_PLACEHOLDER}{idx}")] = BlankNode(f"b{counter}")
            counter += 1
        graph = Graph(prefixes=self.prefixes)
        for s, p, o in self.triples:
            graph.add(Triple(rename.get(s, s), p, rename.get(o, o)))
        return graph


def _unescape_local(local: str) -> str:
    return local.replace("\\", "")


def parse_turtle(text: str) -> Graph:
    """Parse a Turtle document. Raises :class:`ParseError` on any defect."""
    return _TurtleParser(text).parse()


def parse_file(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_turtle(fh.read())


# -- serialization -------------------------------------------------------

class _Writer:
    def __init__(self, graph: Graph):
        self.graph = graph
        self.prefixes = sorted(graph.prefixes.items(), key=lambda kv: (-len(kv[1]), kv[0]))
        self.refs: Counter = Counter(o for _, _, o in graph if isinstance(o, BlankNode))
        self.done: Set[BlankNode] = set()
        self.cyclic = self._cyclic_nodes()

    def _cyclic_nodes(self) -> Set[BlankNode]:
        """Once-referenced blank nodes that lie on a cycle of once-referenced blank nodes.

        These get a labelled block of their own. Choosing among them by label
        would not survive a reparse, since the parser renames inlined nodes.
        """
        referrer = {o: s for s, _, o in self.graph if isinstance(o, BlankNode) and self.refs[o] == 1}
        cyclic: Set[BlankNode] = set()
        for node in referrer:
            seen = {node}
            current = referrer[node]
            while current in referrer and current not in seen:
                seen.add(current)
                current = referrer[current]
            if current == node:
                cyclic.add(node)
        return cyclic

    def iri(self, iri: Iri) -> str:
        value = iri.value
        for label, ns in self.prefixes:
            if value.startswith(ns) and len(value) > len(ns) or value == ns:
                local = value[len(ns):]
                if local == "" or PN_LOCAL.fullmatch(local):
                    return f"{label}:{local}"
        return "<" + value.replace("\\", "\\\\") + ">"

    def literal(self, lit: Literal) -> str:
        if lit.language is not None:
            return f'"{escape_string(lit.lexical)}"@{lit.language}'
        body = f'"{escape_string(lit.lexical)}"'
        if lit.datatype == XSD_STRING:
            return body
        return f"{body}^^{self.iri(Iri(lit.datatype))}"

    def inlinable(self, node: BlankNode) -> bool:
        return self.refs[node] == 1 and node not in self.done and node not in self.cyclic

    def as_list(self, node: BlankNode) -> Optional[List[Term]]:
        items = []
        seen = set()
        current: Term = node
        while current != RDF_NIL:
            if not isinstance(current, BlankNode) or current in seen:
                return None
            if current != node and self.refs[current] != 1:
                return None
            props = list(self.graph.match(current, None, None))
            firsts = [t.object for t in props if t.predicate == RDF_FIRST]
            rests = [t.object for t in props if t.predicate == RDF_REST]
            if len(props) != 2 or len(firsts) != 1 or len(rests) != 1:
                return None
            seen.add(current)
            items.append(firsts[0])
            current = rests[0]
        return items

    def term(self, t: Term, indent: int) -> str:
        if isinstance(t, Iri):
            return self.iri(t)
        if isinstance(t, Literal):
            return self.literal(t)
        if self.inlinable(t):
            items = self.as_list(t)
            if items is not None:
                self.mark_list(t)
                return "( " + " ".join(self.term(i, indent) for i in items) + " )"
            self.done.add(t)
            body = self.property_list(t, indent + 4)
            if not body:
                return "[]"
            return "[\n" + body + "\n" + " " * indent + "]"
        return f"_:{t.label}"

    def mark_list(self, node: BlankNode) -> None:
        current: Term = node
        while current != RDF_NIL:
            self.done.add(current)  # type: ignore[arg-type]
            current = self.graph.value(current, RDF_REST)  # type: ignore[assignment]

    def property_list(self, subject: Term, indent: int) -> str:
        by_pred: Dict[Iri, List[Term]] = defaultdict(list)
        for _, p, o in self.graph.match(subject, None, None):
            by_pred[p].append(o)
        lines = []
        pad = " " * indent
        for pred in sorted(by_pred, key=_pred_key):
            verb = "a" if pred == RDF_TYPE else self.iri(pred)
            objects = sorted(by_pred[pred], key=term_sort_key)
            rendered = [(o, self.term(o, indent)) for o in objects]
            # inlined blank nodes are ordered by their text: labels do not survive a reparse
            rendered.sort(key=lambda pair: (1.5, pair[1], "", "") if pair[1][0] in "[(" else term_sort_key(pair[0]))
            lines.append(f"{pad}{verb} " + ", ".join(text for _, text in rendered))
        return " ;\n".join(lines)

    def write(self) -> str:
        out = [f"@prefix {label}: <{ns}> ." for label, ns in sorted(self.graph.prefixes.items())]
        subjects = sorted({t.subject for t in self.graph}, key=term_sort_key)
        blocks = []
        for subject in subjects:
            if isinstance(subject, BlankNode) and self.refs[subject] == 1 and subject not in self.cyclic:
                continue
            blocks.append(self.subject_block(subject))
        text = "\n".join(out)
        if blocks:
            text += ("\n\n" if out else "") + "\n\n".join(blocks)
        return text + "\n"

    def subject_block(self, subject: Term) -> str:
        if isinstance(subject, BlankNode):
            self.done.add(subject)
            head = f"_:{subject.label}"
        else:
            head = self.iri(subject)  # type: ignore[arg-type]
        return head + "\n" + self.property_list(subject, 4) + " ."


def _pred_key(p: Iri):
    return (p != RDF_TYPE, p.value)


def term_sort_key(t: Term) -> Tuple:
    if isinstance(t, Iri):
        return (0, t.value, "", "")
    if isinstance(t, BlankNode):
        return (1, t.label, "", "")
    return (2, t.lexical, t.datatype, t.language or "")


def serialize_turtle(graph: Graph) -> str:
    """Deterministic Turtle: prefixes, then subjects and predicates sorted.

    Blank nodes referenced exactly once are written inline, as ``( ... )``
    when they head a well-formed list and ``[ ... ]`` otherwise.
    """
    return _Writer(graph).write()


def write_file(graph: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_turtle(graph))
