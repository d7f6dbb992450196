"""RDF terms and triples.

Terms are immutable and hashable. Equality is structural: two literals with
the same value but different lexical forms or datatypes are different terms.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

XSD = "http://www.w3.org/2001/XMLSchema#"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"

XSD_STRING = XSD + "string"
RDF_LANGSTRING = RDF + "langString"

_WHITESPACE = re.compile(r"\s")


@dataclass(frozen=True, slots=True)
class Iri:
    value: str

    def __post_init__(self) -> None:
        if not self.value or _WHITESPACE.search(self.value):
            raise ValueError(f"invalid IRI: {self.value!r}")

    def __str__(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("blank node label must be non-empty")

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: str = XSD_STRING
    language: Optional[str] = None

    def __post_init__(self) -> None:
        if self.language is not None:
            if self.datatype == XSD_STRING:
                object.__setattr__(self, "datatype", RDF_LANGSTRING)
            elif self.datatype != RDF_LANGSTRING:
                raise ValueError("language tag requires rdf:langString datatype")
            if not self.language:
                raise ValueError("empty language tag")
        elif self.datatype == RDF_LANGSTRING:
            raise ValueError("rdf:langString literal requires a language tag")

    def __str__(self) -> str:
        text = '"' + escape_string(self.lexical) + '"'
        if self.language is not None:
            return f"{text}@{self.language}"
        if self.datatype == XSD_STRING:
            return text
        return f"{text}^^<{self.datatype}>"


Term = Union[Iri, BlankNode, Literal]
Subject = Union[Iri, BlankNode]


class Triple(NamedTuple):
    subject: Subject
    predicate: Iri
    object: Term


_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t", "\b": "\\b", "\f": "\\f"}


def escape_string(text: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in text)


def triple(s: Subject, p: Iri, o: Term) -> Triple:
    """Build a triple, checking position constraints."""
    if not isinstance(s, (Iri, BlankNode)):
        raise TypeError(f"subject must be an IRI or blank node, got {s!r}")
    if not isinstance(p, Iri):
        raise TypeError(f"predicate must be an IRI, got {p!r}")
    if not isinstance(o, (Iri, BlankNode, Literal)):
        raise TypeError(f"object must be a term, got {o!r}")
    return Triple(s, p, o)


def namespace_of(iri: str) -> str:
    """IRI up to and including the last '#' or '/'."""
    cut = max(iri.rfind("#"), iri.rfind("/"))
    return iri[: cut + 1] if cut >= 0 else iri


class Namespace(str):
    """String namespace whose attribute and item access mint IRIs."""

    def __getattr__(self, name: str) -> Iri:
        if name.startswith("__"):
            raise AttributeError(name)
        return Iri(str(self) + name)

    def __getitem__(self, name) -> Iri:  # type: ignore[override]
        return Iri(str(self) + name)


RDF_NS = Namespace(RDF)
RDFS_NS = Namespace(RDFS)
OWL_NS = Namespace(OWL)
XSD_NS = Namespace(XSD)

RDF_TYPE = RDF_NS.type
RDF_FIRST = RDF_NS.first
RDF_REST = RDF_NS.rest
RDF_NIL = RDF_NS.nil

BUILTIN_NAMESPACES = (RDF, RDFS, OWL, XSD)


def is_builtin(term: Term) -> bool:
    return isinstance(term, Iri) and term.value.startswith(BUILTIN_NAMESPACES)
