"""Detection of two modelling pitfalls: synonym classes (P02) and unconnected elements (P04)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set

from .graph import Graph
from .metrics import ANNOTATION_PREDICATES, ANNOTATION_PROPERTY, DATATYPE_PROPERTY, OBJECT_PROPERTY, OWL_CLASS, RDFS_CLASS
from .terms import OWL_NS, RDF_TYPE, Iri, is_builtin, namespace_of

DECLARATION_TYPES = {OWL_CLASS, RDFS_CLASS, OBJECT_PROPERTY, DATATYPE_PROPERTY}
KNOWN_CODES = ("P02", "P04")
MESSAGES = {
    "P02": "Creating synonyms as classes: classes declared equivalent in the same namespace",
    "P04": "Creating unconnected ontology elements: element takes part in no logical axiom",
}


@dataclass(frozen=True)
class Finding:
    code: str
    elements: tuple
    message: str
    severity: str = "minor"

    def line(self) -> str:
        iris = " ".join(f"<{e.value}>" for e in self.elements)
        return f"{self.code} {self.severity} {iris} -- {self.message}"


def scan(graph: Graph, codes: Optional[Iterable[str]] = None,
         allow_external: Sequence[str] = ()) -> List[Finding]:
    """Return findings sorted by code, then by element IRIs.

    ``allow_external`` holds namespace IRIs or prefix labels bound in ``graph``;
    elements under them never produce P04.
    """
    wanted = set(codes) if codes is not None else set(KNOWN_CODES)
    unknown = wanted - set(KNOWN_CODES)
    if unknown:
        raise ValueError(f"unknown pitfall codes: {sorted(unknown)}")
    findings: List[Finding] = []
    if "P02" in wanted:
        findings.extend(_synonym_classes(graph))
    if "P04" in wanted:
        findings.extend(_unconnected(graph, _expand_allowlist(graph, allow_external)))
    findings.sort(key=lambda f: (f.code, tuple(e.value for e in f.elements)))
    return findings


def _expand_allowlist(graph: Graph, entries: Sequence[str]) -> List[str]:
    out = []
    for entry in entries:
        label = entry[:-1] if entry.endswith(":") else entry
        out.append(graph.prefixes.get(label, entry))
    return out


def _synonym_classes(graph: Graph) -> List[Finding]:
    parent: Dict[Iri, Iri] = {}

    def find(x: Iri) -> Iri:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, _, o in graph.match(None, OWL_NS.equivalentClass, None):
        if isinstance(s, Iri) and isinstance(o, Iri) and s != o:
            parent[find(s)] = find(o)
    groups: Dict[Iri, List[Iri]] = {}
    for node in list(parent):
        groups.setdefault(find(node), []).append(node)
    findings = []
    for members in groups.values():
        members.sort(key=lambda t: t.value)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if namespace_of(a.value) == namespace_of(b.value):
                    findings.append(Finding("P02", (a, b), MESSAGES["P02"]))
    return findings


def _unconnected(graph: Graph, allowed: List[str]) -> List[Finding]:
    annotation = set(ANNOTATION_PREDICATES) | set(graph.subjects(RDF_TYPE, ANNOTATION_PROPERTY))
    declared: Set[Iri] = set()
    for kind in DECLARATION_TYPES:
        declared |= {t for t in graph.subjects(RDF_TYPE, kind) if isinstance(t, Iri) and not is_builtin(t)}
    connected: Set[Iri] = set()
    for s, p, o in graph:
        if p in annotation:
            continue
        if p == RDF_TYPE and o in DECLARATION_TYPES:
            continue
        connected.add(p)
        if isinstance(s, Iri):
            connected.add(s)
        if isinstance(o, Iri):
            connected.add(o)
    findings = []
    for element in declared - connected:
        if any(element.value.startswith(prefix) for prefix in allowed):
            continue
        findings.append(Finding("P04", (element,), MESSAGES["P04"]))
    return findings


__all__ = ["Finding", "scan", "KNOWN_CODES"]
