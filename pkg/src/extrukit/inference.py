"""Forward-chaining materialization and consistency checks.

Rules (all over named terms; no new terms are ever minted):

* subclass and subproperty transitivity, equivalent classes as mutual subclasses
* type inheritance, subproperty propagation, domain and range typing
* inverse, symmetric and transitive properties
* binary property chains ``p1 o p2 -> p``
* optionally, reflexive properties over every individual
"""
from __future__ import annotations

import enum
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from .errors import MalformedChain
from .graph import Graph
from .terms import (OWL_NS, RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, RDFS_NS, Iri, Literal, Term, Triple,
                    is_builtin)

SUBCLASS = RDFS_NS.subClassOf
SUBPROPERTY = RDFS_NS.subPropertyOf
DOMAIN = RDFS_NS.domain
RANGE = RDFS_NS.range
INVERSE = OWL_NS.inverseOf
CHAIN = OWL_NS.propertyChainAxiom
EQUIVALENT_CLASS = OWL_NS.equivalentClass
DISJOINT = OWL_NS.disjointWith
SYMMETRIC = OWL_NS.SymmetricProperty
TRANSITIVE = OWL_NS.TransitiveProperty
REFLEXIVE = OWL_NS.ReflexiveProperty
FUNCTIONAL = OWL_NS.FunctionalProperty

SCHEMA_PREDICATES = frozenset({SUBCLASS, SUBPROPERTY, DOMAIN, RANGE, INVERSE, CHAIN, EQUIVALENT_CLASS, DISJOINT})
CHARACTERISTICS = frozenset({SYMMETRIC, TRANSITIVE, REFLEXIVE, FUNCTIONAL})

Edge = Tuple[Iri, Iri]


@dataclass
class RuleSet:
    sub_class_of: Set[Edge] = field(default_factory=set)
    sub_property_of: Set[Edge] = field(default_factory=set)
    domain: Dict[Iri, Set[Iri]] = field(default_factory=lambda: defaultdict(set))
    range: Dict[Iri, Set[Iri]] = field(default_factory=lambda: defaultdict(set))
    inverse_pairs: Set[FrozenSet[Iri]] = field(default_factory=set)
    symmetric: Set[Iri] = field(default_factory=set)
    transitive: Set[Iri] = field(default_factory=set)
    reflexive: Set[Iri] = field(default_factory=set)
    functional: Set[Iri] = field(default_factory=set)
    chains: List[Tuple[Tuple[Iri, Iri], Iri]] = field(default_factory=list)
    equivalent_classes: Set[FrozenSet[Iri]] = field(default_factory=set)
    disjoint_classes: Set[FrozenSet[Iri]] = field(default_factory=set)

    def is_empty(self) -> bool:
        return not any((self.sub_class_of, self.sub_property_of, self.domain, self.range, self.inverse_pairs,
                        self.symmetric, self.transitive, self.reflexive, self.functional, self.chains,
                        self.equivalent_classes, self.disjoint_classes))


def read_list(graph: Graph, head: Term) -> List[Term]:
    """Decode an rdf:first/rdf:rest collection; raise MalformedChain if broken."""
    items: List[Term] = []
    seen = set()
    node = head
    while node != RDF_NIL:
        if node in seen or isinstance(node, Literal):
            raise MalformedChain(f"list at {head} is cyclic or ill-formed")
        seen.add(node)
        firsts = list(graph.objects(node, RDF_FIRST))
        rests = list(graph.objects(node, RDF_REST))
        if len(firsts) != 1 or len(rests) != 1:
            raise MalformedChain(f"list node {node} needs exactly one rdf:first and one rdf:rest")
        items.append(firsts[0])
        node = rests[0]
    return items


def extract_schema(graph: Graph) -> RuleSet:
    rules = RuleSet()
    for s, _, o in graph.match(None, SUBCLASS, None):
        if isinstance(s, Iri) and isinstance(o, Iri):
            rules.sub_class_of.add((s, o))
    for s, _, o in graph.match(None, SUBPROPERTY, None):
        if isinstance(s, Iri) and isinstance(o, Iri):
            rules.sub_property_of.add((s, o))
    for s, _, o in graph.match(None, DOMAIN, None):
        if isinstance(s, Iri) and isinstance(o, Iri):
            rules.domain[s].add(o)
    for s, _, o in graph.match(None, RANGE, None):
        if isinstance(s, Iri) and isinstance(o, Iri):
            rules.range[s].add(o)
    for s, _, o in graph.match(None, INVERSE, None):
        if isinstance(s, Iri) and isinstance(o, Iri):
            rules.inverse_pairs.add(frozenset((s, o)))
    for kind, target in ((SYMMETRIC, rules.symmetric), (TRANSITIVE, rules.transitive),
                         (REFLEXIVE, rules.reflexive), (FUNCTIONAL, rules.functional)):
        target.update(s for s in graph.subjects(RDF_TYPE, kind) if isinstance(s, Iri))
    for s, _, head in graph.match(None, CHAIN, None):
        items = read_list(graph, head)
        if len(items) != 2 or not all(isinstance(i, Iri) for i in items):
            raise MalformedChain(f"chain for {s} must list exactly two properties, got {len(items)}")
        rules.chains.append(((items[0], items[1]), s))  # type: ignore[arg-type]
    rules.chains.sort(key=lambda c: (c[1].value, c[0][0].value, c[0][1].value))
    for s, _, o in graph.match(None, EQUIVALENT_CLASS, None):
        if isinstance(s, Iri) and isinstance(o, Iri):
            rules.equivalent_classes.add(frozenset((s, o)))
    for s, _, o in graph.match(None, DISJOINT, None):
        if isinstance(s, Iri) and isinstance(o, Iri):
            rules.disjoint_classes.add(frozenset((s, o)))
    return rules


def transitive_closure(edges: Iterable[Edge]) -> Dict[Iri, Set[Iri]]:
    """Map each node to everything reachable from it (itself only via a cycle)."""
    succ: Dict[Iri, Set[Iri]] = defaultdict(set)
    for a, b in edges:
        succ[a].add(b)
    closure: Dict[Iri, Set[Iri]] = {}
    for start in list(succ):
        seen: Set[Iri] = set()
        stack = list(succ[start])
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(succ.get(node, ()))
        closure[start] = seen
    return closure


class _Engine:
    def __init__(self, graph: Graph, rules: RuleSet):
        self.graph = graph
        class_edges = set(rules.sub_class_of)
        for pair in rules.equivalent_classes:
            members = tuple(pair)
            a, b = members if len(members) == 2 else (members[0], members[0])
            class_edges.update(((a, b), (b, a)))
        self.superclasses = transitive_closure(class_edges)
        self.superproperties = transitive_closure(rules.sub_property_of)
        self.domain = rules.domain
        self.range = rules.range
        self.inverse: Dict[Iri, Set[Iri]] = defaultdict(set)
        for pair in rules.inverse_pairs:
            members = tuple(pair)
            a, b = members if len(members) == 2 else (members[0], members[0])
            self.inverse[a].add(b)
            self.inverse[b].add(a)
        self.symmetric = rules.symmetric
        self.transitive = rules.transitive
        self.chains_first: Dict[Iri, List[Tuple[Iri, Iri]]] = defaultdict(list)
        self.chains_second: Dict[Iri, List[Tuple[Iri, Iri]]] = defaultdict(list)
        for (p1, p2), p in rules.chains:
            self.chains_first[p1].append((p2, p))
            self.chains_second[p2].append((p1, p))
        self.queue: deque = deque()
        self.added = 0

    def emit(self, s: Term, p: Iri, o: Term) -> None:
        if isinstance(s, Literal):
            return
        t = Triple(s, p, o)  # type: ignore[arg-type]
        if self.graph.add(t):
            self.added += 1
            self.queue.append(t)

    def schema_triples(self) -> None:
        for sub, sups in self.superclasses.items():
            for sup in sups:
                self.emit(sub, SUBCLASS, sup)
        for sub, sups in self.superproperties.items():
            for sup in sups:
                self.emit(sub, SUBPROPERTY, sup)

    def run(self, seeds: Iterable[Triple]) -> None:
        self.queue.extend(seeds)
        graph = self.graph
        while self.queue:
            s, p, o = self.queue.popleft()
            if p == RDF_TYPE and isinstance(o, Iri):
                for sup in self.superclasses.get(o, ()):
                    self.emit(s, RDF_TYPE, sup)
            for sup in self.superproperties.get(p, ()):
                self.emit(s, sup, o)
            for cls in self.domain.get(p, ()):
                self.emit(s, RDF_TYPE, cls)
            # joins where this triple is the second leg are fine with a literal object
            if p in self.transitive:
                for x, _, _ in graph.match(None, p, s):
                    self.emit(x, p, o)
            for p1, target in self.chains_second.get(p, ()):
                for x, _, _ in graph.match(None, p1, s):
                    self.emit(x, target, o)
            if isinstance(o, Literal):
                continue
            for cls in self.range.get(p, ()):
                self.emit(o, RDF_TYPE, cls)
            for inv in self.inverse.get(p, ()):
                self.emit(o, inv, s)
            if p in self.symmetric:
                self.emit(o, p, s)
            if p in self.transitive:
                for _, _, z in graph.match(o, p, None):
                    self.emit(s, p, z)
            for p2, target in self.chains_first.get(p, ()):
                for _, _, z in graph.match(o, p2, None):
                    self.emit(s, target, z)


def individuals(graph: Graph) -> Set[Term]:
    """Subjects and objects of assertions whose predicate is not built-in vocabulary."""
    out: Set[Term] = set()
    for s, p, o in graph:
        if p == RDF_TYPE:
            if not is_builtin(o):
                out.add(s)
            continue
        if is_builtin(p):
            continue
        out.add(s)
        if not isinstance(o, Literal):
            out.add(o)
    return out


def materialize(graph: Graph, reflexive: bool = False) -> Graph:
    """Return a new graph: the closure of ``graph`` under the rule set.

    Schema is read once; if inference produces new schema triples (only
    possible when schema vocabulary is itself a subproperty target) the
    closure is recomputed with the enlarged schema until stable.
    """
    out = graph.copy()
    while True:
        rules = extract_schema(out)
        engine = _Engine(out, rules)
        engine.schema_triples()
        before = _schema_signature(out)
        seeds = list(out)
        if reflexive and rules.reflexive:
            for ind in sorted(individuals(out), key=repr):
                for prop in sorted(rules.reflexive, key=lambda x: x.value):
                    engine.emit(ind, prop, ind)
        engine.run(seeds)
        if _schema_signature(out) == before:
            return out


def _schema_signature(graph: Graph) -> int:
    n = sum(1 for p in SCHEMA_PREDICATES for _ in graph.match(None, p, None))
    n += sum(1 for c in CHARACTERISTICS for _ in graph.match(None, RDF_TYPE, c))
    return n


# -- consistency ----------------------------------------------------------

class ClashKind(str, enum.Enum):
    DISJOINT = "DisjointClash"
    FUNCTIONAL = "FunctionalViolation"


@dataclass(frozen=True)
class ClashReport:
    kind: ClashKind
    individual: Term
    details: Tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.kind.value} {self.individual} " + " ".join(self.details)


def check_consistency(materialized: Graph) -> List[ClashReport]:
    """Disjoint-class double typing and functional-property clashes.

    Expects an already materialized graph; no reasoning happens here.
    """
    rules = extract_schema(materialized)
    reports: List[ClashReport] = []
    for pair in sorted(rules.disjoint_classes, key=lambda p: sorted(x.value for x in p)):
        members = sorted(pair, key=lambda x: x.value)
        if len(members) == 1:
            a = b = members[0]
        else:
            a, b = members
        typed_a = set(materialized.subjects(RDF_TYPE, a))
        typed_b = set(materialized.subjects(RDF_TYPE, b))
        for ind in sorted(typed_a & typed_b, key=repr):
            reports.append(ClashReport(ClashKind.DISJOINT, ind, (a.value, b.value)))
    for prop in sorted(rules.functional, key=lambda p: p.value):
        values: Dict[Term, Set[Term]] = defaultdict(set)
        for s, _, o in materialized.match(None, prop, None):
            values[s].add(o)
        for ind in sorted(values, key=repr):
            if len(values[ind]) >= 2:
                objs = sorted(str(v) for v in values[ind])
                reports.append(ClashReport(ClashKind.FUNCTIONAL, ind, (prop.value, *objs)))
    return reports


__all__ = [
    "RuleSet", "ClashKind", "ClashReport", "extract_schema", "materialize", "check_consistency",
    "individuals", "read_list", "transitive_closure",
]
