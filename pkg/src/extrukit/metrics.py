"""Axiom census and OntoQA-style schema and graph metrics."""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Dict, List, Optional, Set

from .errors import CycleDetected
from .graph import Graph
from .terms import OWL_NS, RDF_TYPE, RDFS_NS, Iri, Literal, is_builtin

OWL_CLASS = OWL_NS.Class
RDFS_CLASS = RDFS_NS.Class
OBJECT_PROPERTY = OWL_NS.ObjectProperty
DATATYPE_PROPERTY = OWL_NS.DatatypeProperty
ANNOTATION_PROPERTY = OWL_NS.AnnotationProperty
NAMED_INDIVIDUAL = OWL_NS.NamedIndividual
OBJECT_CHARACTERISTICS = {
    OWL_NS.TransitiveProperty, OWL_NS.SymmetricProperty, OWL_NS.ReflexiveProperty,
    OWL_NS.AsymmetricProperty, OWL_NS.IrreflexiveProperty, OWL_NS.InverseFunctionalProperty,
}
ANNOTATION_PREDICATES = {
    RDFS_NS.label, RDFS_NS.comment, RDFS_NS.seeAlso, RDFS_NS.isDefinedBy,
    OWL_NS.versionInfo, OWL_NS.deprecated, OWL_NS.priorVersion, OWL_NS.backwardCompatibleWith,
    OWL_NS.incompatibleWith,
}


@dataclass
class AxiomCensus:
    classCount: int = 0
    objectPropertyCount: int = 0
    dataPropertyCount: int = 0
    individualCount: int = 0
    subClassOf: int = 0
    equivalentClasses: int = 0
    disjointClasses: int = 0
    subObjectPropertyOf: int = 0
    inverseObjectProperties: int = 0
    functionalObjectProperty: int = 0
    transitiveObjectProperty: int = 0
    symmetricObjectProperty: int = 0
    reflexiveObjectProperty: int = 0
    objectPropertyDomain: int = 0
    objectPropertyRange: int = 0
    subPropertyChainOf: int = 0
    dataPropertyDomain: int = 0
    dataPropertyRange: int = 0
    classAssertion: int = 0
    objectPropertyAssertion: int = 0
    dataPropertyAssertion: int = 0
    logicalAxiomTotal: int = 0

    ENTITY_FIELDS = ("classCount", "objectPropertyCount", "dataPropertyCount", "individualCount")

    @classmethod
    def axiom_fields(cls) -> List[str]:
        skip = set(cls.ENTITY_FIELDS) | {"logicalAxiomTotal"}
        return [f.name for f in fields(cls) if f.name not in skip]

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass
class SchemaMetrics:
    """Ratios; None marks a zero denominator (undefined)."""

    attributeRichness: Optional[Fraction]
    inheritanceRichness: Optional[Fraction]
    relationshipRichness: Optional[Fraction]
    equivalenceRatio: Optional[Fraction]
    axiomClassRatio: Optional[Fraction]
    inverseRelationsRatio: Optional[Fraction]
    classRelationRatio: Optional[Fraction]

    def as_dict(self) -> Dict[str, Optional[Fraction]]:
        return asdict(self)


@dataclass
class GraphMetrics:
    rootCardinality: int
    leafCardinality: int
    siblingCardinality: int
    absoluteDepth: int
    averageDepth: Fraction
    maximalDepth: int
    absoluteBreadth: int
    averageBreadth: Fraction
    maximalBreadth: int
    leafFanOutRatio: Fraction
    siblingFanOutRatio: Fraction
    tangledness: Fraction
    totalPaths: int

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)


def _typed(graph: Graph, cls: Iri) -> Set:
    return set(graph.subjects(RDF_TYPE, cls))


def named_classes(graph: Graph) -> Set[Iri]:
    """Declared classes plus IRIs used as a type object or subclass endpoint."""
    classes = {c for c in _typed(graph, OWL_CLASS) | _typed(graph, RDFS_CLASS) if isinstance(c, Iri)}
    for _, _, o in graph.match(None, RDF_TYPE, None):
        if isinstance(o, Iri) and not is_builtin(o):
            classes.add(o)
    for s, _, o in graph.match(None, RDFS_NS.subClassOf, None):
        for t in (s, o):
            if isinstance(t, Iri) and not is_builtin(t):
                classes.add(t)
    return classes


def census(graph: Graph) -> AxiomCensus:
    c = AxiomCensus()
    data_props = {p for p in _typed(graph, DATATYPE_PROPERTY) if isinstance(p, Iri)}
    annotation_props = {p for p in _typed(graph, ANNOTATION_PROPERTY) if isinstance(p, Iri)}
    object_props = {p for p in _typed(graph, OBJECT_PROPERTY) if isinstance(p, Iri)}
    for kind in OBJECT_CHARACTERISTICS:
        object_props |= {p for p in _typed(graph, kind) if isinstance(p, Iri)}
    for s, _, o in graph.match(None, OWL_NS.inverseOf, None):
        object_props |= {t for t in (s, o) if isinstance(t, Iri)}
    object_props -= data_props

    classes = named_classes(graph)
    c.classCount = len(classes)
    c.objectPropertyCount = len(object_props)
    c.dataPropertyCount = len(data_props)

    c.subClassOf = len(list(graph.match(None, RDFS_NS.subClassOf, None)))
    c.equivalentClasses = len(list(graph.match(None, OWL_NS.equivalentClass, None)))
    c.disjointClasses = (len(list(graph.match(None, OWL_NS.disjointWith, None)))
                         + len(_typed(graph, OWL_NS.AllDisjointClasses)))
    for s, _, _ in graph.match(None, RDFS_NS.subPropertyOf, None):
        if s not in data_props and s not in annotation_props:
            c.subObjectPropertyOf += 1
    pairs = {frozenset((s, o)) for s, _, o in graph.match(None, OWL_NS.inverseOf, None)}
    c.inverseObjectProperties = len(pairs)
    c.functionalObjectProperty = len({p for p in _typed(graph, OWL_NS.FunctionalProperty) if p not in data_props})
    c.transitiveObjectProperty = len(_typed(graph, OWL_NS.TransitiveProperty))
    c.symmetricObjectProperty = len(_typed(graph, OWL_NS.SymmetricProperty))
    c.reflexiveObjectProperty = len(_typed(graph, OWL_NS.ReflexiveProperty))
    for pred, obj_field, data_field in ((RDFS_NS.domain, "objectPropertyDomain", "dataPropertyDomain"),
                                        (RDFS_NS.range, "objectPropertyRange", "dataPropertyRange")):
        for s, _, _ in graph.match(None, pred, None):
            if s in annotation_props:
                continue
            name = data_field if s in data_props else obj_field
            setattr(c, name, getattr(c, name) + 1)
    c.subPropertyChainOf = len(list(graph.match(None, OWL_NS.propertyChainAxiom, None)))

    individuals = {i for i in _typed(graph, NAMED_INDIVIDUAL) if isinstance(i, Iri)}
    for s, p, o in graph:
        if p == RDF_TYPE:
            if isinstance(o, Iri) and not is_builtin(o):
                c.classAssertion += 1
                individuals.add(s)
            continue
        if is_builtin(p) or p in annotation_props:
            continue
        if isinstance(o, Literal):
            c.dataPropertyAssertion += 1
        else:
            c.objectPropertyAssertion += 1
            if isinstance(o, Iri):
                individuals.add(o)
        individuals.add(s)
    c.individualCount = len({i for i in individuals if isinstance(i, Iri)})
    c.logicalAxiomTotal = sum(getattr(c, name) for name in AxiomCensus.axiom_fields())
    return c


def _ratio(num: int, den: int) -> Optional[Fraction]:
    return Fraction(num, den) if den else None


def schema_metrics(c: AxiomCensus) -> SchemaMetrics:
    return SchemaMetrics(
        attributeRichness=_ratio(c.dataPropertyCount, c.classCount),
        inheritanceRichness=_ratio(c.subClassOf, c.classCount),
        relationshipRichness=_ratio(c.objectPropertyCount, c.subClassOf + c.objectPropertyCount),
        equivalenceRatio=_ratio(c.equivalentClasses, c.classCount),
        axiomClassRatio=_ratio(c.logicalAxiomTotal, c.classCount),
        inverseRelationsRatio=_ratio(2 * c.inverseObjectProperties, c.objectPropertyCount),
        classRelationRatio=_ratio(c.classCount, c.subClassOf + c.objectPropertyCount),
    )


def class_hierarchy(graph: Graph):
    """Named classes plus direct named superclass and subclass maps (self-loops dropped)."""
    classes = named_classes(graph)
    parents: Dict[Iri, Set[Iri]] = defaultdict(set)
    children: Dict[Iri, Set[Iri]] = defaultdict(set)
    for s, _, o in graph.match(None, RDFS_NS.subClassOf, None):
        if s in classes and o in classes and s != o:
            parents[s].add(o)
            children[o].add(s)
    return classes, parents, children


def graph_metrics(graph: Graph) -> GraphMetrics:
    classes, parents, children = class_hierarchy(graph)
    order = _topological(classes, parents, children)
    n = len(classes)
    roots = [c for c in order if not parents[c]]
    leaves = {c for c in classes if not children[c]}

    # number of root-to-node chains and their summed length (in nodes), in topological order
    paths_to: Dict[Iri, int] = {}
    length_to: Dict[Iri, int] = {}
    longest_to: Dict[Iri, int] = {}
    for c in order:
        if not parents[c]:
            paths_to[c], length_to[c], longest_to[c] = 1, 1, 1
        else:
            paths_to[c] = sum(paths_to[p] for p in parents[c])
            length_to[c] = sum(length_to[p] for p in parents[c]) + paths_to[c]
            longest_to[c] = max(longest_to[p] for p in parents[c]) + 1
    total_paths = sum(paths_to[c] for c in leaves)
    absolute_depth = sum(length_to[c] for c in leaves)
    maximal_depth = max((longest_to[c] for c in leaves), default=0)

    level: Dict[Iri, int] = {r: 1 for r in roots}
    queue = deque(roots)
    while queue:
        c = queue.popleft()
        for child in sorted(children[c], key=lambda t: t.value):
            if child not in level:
                level[child] = level[c] + 1
                queue.append(child)
    per_level: Dict[int, int] = defaultdict(int)
    for c in classes:
        per_level[level[c]] += 1

    with_sibling = set()
    for c in classes:
        siblings = set().union(*(children[p] for p in parents[c])) - {c} if parents[c] else set()
        if siblings:
            with_sibling.add(c)
    if len(roots) >= 2:
        with_sibling.update(roots)
    tangled = sum(1 for c in classes if len(parents[c]) > 1)

    def frac(num: int, den: int) -> Fraction:
        return Fraction(num, den) if den else Fraction(0)

    return GraphMetrics(
        rootCardinality=len(roots),
        leafCardinality=len(leaves),
        siblingCardinality=len(with_sibling),
        absoluteDepth=absolute_depth,
        averageDepth=frac(absolute_depth, total_paths),
        maximalDepth=maximal_depth,
        absoluteBreadth=sum(per_level.values()),
        averageBreadth=frac(sum(per_level.values()), len(per_level)),
        maximalBreadth=max(per_level.values(), default=0),
        leafFanOutRatio=frac(len(leaves), n),
        siblingFanOutRatio=frac(len(with_sibling), n),
        tangledness=frac(tangled, n),
        totalPaths=total_paths,
    )


def _topological(classes, parents, children) -> List[Iri]:
    indegree = {c: len(parents[c]) for c in classes}
    ready = sorted((c for c in classes if indegree[c] == 0), key=lambda t: t.value)
    order: List[Iri] = []
    while ready:
        c = ready.pop()
        order.append(c)
        for child in children[c]:
            indegree[child] -= 1
            if indegree[child] == 0:
                ready.append(child)
    if len(order) != len(classes):
        stuck = sorted(c.value for c in classes if indegree[c] > 0)
        raise CycleDetected(f"subclass cycle through {stuck[0]}")
    return order


def format_value(value) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{float(value):.6f}"
    return str(value)


def json_value(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    return value


__all__ = [
    "AxiomCensus", "SchemaMetrics", "GraphMetrics", "census", "schema_metrics", "graph_metrics",
    "named_classes", "class_hierarchy", "format_value", "json_value",
]
