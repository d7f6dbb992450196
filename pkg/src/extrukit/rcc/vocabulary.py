"""The spatial vocabulary (RCC8/RCC5 object properties) as an RDF graph."""
from __future__ import annotations

from typing import List, Tuple

from ..graph import Graph
from ..terms import OWL_NS, RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, RDFS_NS, BlankNode, Iri, Literal, Namespace, Triple
from .algebra import Rcc8, deterministic_chains

S4E = Namespace("http://bdi.si.ehu.es/bdi/ontologies/ExtruOnt/spatial4ExtruOnt#")
DUL = Namespace("http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#")

RCC8_PROPERTIES = {r: f"rcc8{r.name.lower()}" for r in Rcc8}
RCC5_PROPERTIES = ["rcc5dr", "rcc5po", "rcc5pp", "rcc5ppi", "rcc5eq"]
GENERAL_PROPERTIES = ["overlaps", "overlapsNotEquals"]
ALL_PROPERTIES = list(RCC8_PROPERTIES.values()) + RCC5_PROPERTIES + GENERAL_PROPERTIES

SUBPROPERTY_EDGES: List[Tuple[str, str]] = [
    ("rcc8dc", "rcc5dr"), ("rcc8ec", "rcc5dr"), ("rcc8po", "rcc5po"),
    ("rcc8tpp", "rcc5pp"), ("rcc8ntpp", "rcc5pp"),
    ("rcc8tppi", "rcc5ppi"), ("rcc8ntppi", "rcc5ppi"), ("rcc8eq", "rcc5eq"),
    ("rcc5po", "overlapsNotEquals"), ("rcc5pp", "overlapsNotEquals"), ("rcc5ppi", "overlapsNotEquals"),
    ("overlapsNotEquals", "overlaps"), ("rcc5eq", "overlaps"),
    ("rcc8eq", "overlaps"), ("rcc8po", "overlaps"),
]
SYMMETRIC = ["rcc8dc", "rcc8ec", "rcc8po", "rcc8eq", "rcc5dr", "rcc5po", "rcc5eq", "overlaps", "overlapsNotEquals"]
TRANSITIVE = ["rcc8eq", "rcc8ntpp", "rcc8ntppi"]
REFLEXIVE = ["rcc8eq"]
INVERSE_PAIRS = [("rcc8tpp", "rcc8tppi"), ("rcc8ntpp", "rcc8ntppi"), ("rcc5pp", "rcc5ppi")]

LABELS = {
    "rcc8dc": "disconnected", "rcc8ec": "externally connected", "rcc8po": "partially overlapping",
    "rcc8tpp": "tangential proper part", "rcc8ntpp": "non-tangential proper part",
    "rcc8tppi": "tangential proper part inverse", "rcc8ntppi": "non-tangential proper part inverse",
    "rcc8eq": "equals", "rcc5dr": "discrete", "rcc5po": "partially overlapping", "rcc5pp": "proper part",
    "rcc5ppi": "proper part inverse", "rcc5eq": "equals", "overlaps": "overlaps",
    "overlapsNotEquals": "overlaps but not equal",
}

PREFIXES = {
    "s4e": str(S4E),
    "dul": str(DUL),
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "owl": "http://www.w3.org/2002/07/owl#",
}


def property_iri(rel: Rcc8) -> Iri:
    return S4E[RCC8_PROPERTIES[rel]]


def vocabulary_graph() -> Graph:
    """Class SpatialObject, 15 object properties and their 88 logical axioms."""
    g = Graph(prefixes=PREFIXES)
    spatial = S4E.SpatialObject
    g.add(Triple(spatial, RDF_TYPE, OWL_NS.Class))
    g.add(Triple(spatial, RDFS_NS.label, Literal("spatial object", language="en")))
    # alignment superclass lives in the components module; here it is only a pointer
    g.add(Triple(spatial, RDFS_NS.seeAlso, DUL.PhysicalObject))
    for name in ALL_PROPERTIES:
        prop = S4E[name]
        g.add(Triple(prop, RDF_TYPE, OWL_NS.ObjectProperty))
        g.add(Triple(prop, RDFS_NS.label, Literal(LABELS[name], language="en")))
        g.add(Triple(prop, RDFS_NS.domain, spatial))
        g.add(Triple(prop, RDFS_NS.range, spatial))
    for sub, sup in SUBPROPERTY_EDGES:
        g.add(Triple(S4E[sub], RDFS_NS.subPropertyOf, S4E[sup]))
    for name in SYMMETRIC:
        g.add(Triple(S4E[name], RDF_TYPE, OWL_NS.SymmetricProperty))
    for name in TRANSITIVE:
        g.add(Triple(S4E[name], RDF_TYPE, OWL_NS.TransitiveProperty))
    for name in REFLEXIVE:
        g.add(Triple(S4E[name], RDF_TYPE, OWL_NS.ReflexiveProperty))
    for a, b in INVERSE_PAIRS:
        g.add(Triple(S4E[a], OWL_NS.inverseOf, S4E[b]))
    for idx, (r, s, t) in enumerate(deterministic_chains()):
        first, second = BlankNode(f"chain{idx}a"), BlankNode(f"chain{idx}b")
        g.add(Triple(property_iri(t), OWL_NS.propertyChainAxiom, first))
        g.add(Triple(first, RDF_FIRST, property_iri(r)))
        g.add(Triple(first, RDF_REST, second))
        g.add(Triple(second, RDF_FIRST, property_iri(s)))
        g.add(Triple(second, RDF_REST, RDF_NIL))
    return g
