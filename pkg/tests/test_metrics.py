from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extrukit import kb
from extrukit.errors import CycleDetected
from extrukit.graph import Graph
from extrukit.metrics import AxiomCensus, census, format_value, graph_metrics, json_value, schema_metrics
from extrukit.terms import Iri, Triple

SUB = Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf")
TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
OWL_CLASS = Iri("http://www.w3.org/2002/07/owl#Class")


def cls(i):
    return Iri(f"http://example.org/m#C{i}")


def hierarchy(n, edges):
    g = Graph(Triple(cls(i), TYPE, OWL_CLASS) for i in range(n))
    g.update(Triple(cls(a), SUB, cls(b)) for a, b in edges)
    return g


def test_census_counts_each_category(ttl):
    g = ttl("""
        :A a owl:Class . :B a owl:Class ; rdfs:subClassOf :A ; owl:disjointWith :C .
        :C owl:equivalentClass :D .
        :p a owl:ObjectProperty , owl:TransitiveProperty ; rdfs:domain :A ; rdfs:range :B ; owl:inverseOf :q .
        :d a owl:DatatypeProperty ; rdfs:domain :A .
        :x a :A ; :p :y ; :d "1" ; rdfs:label "ignored" .
    """)
    c = census(g)
    assert (c.subClassOf, c.disjointClasses, c.equivalentClasses) == (1, 1, 1)
    assert (c.objectPropertyDomain, c.objectPropertyRange, c.dataPropertyDomain) == (1, 1, 1)
    assert (c.transitiveObjectProperty, c.inverseObjectProperties) == (1, 1)
    assert (c.classAssertion, c.objectPropertyAssertion, c.dataPropertyAssertion) == (1, 1, 1)
    assert c.objectPropertyCount == 2 and c.dataPropertyCount == 1
    assert c.logicalAxiomTotal == sum(getattr(c, f) for f in AxiomCensus.axiom_fields())


def test_schema_ratios_and_undefined():
    m = schema_metrics(AxiomCensus(classCount=4, subClassOf=3, objectPropertyCount=1, dataPropertyCount=2))
    assert m.inheritanceRichness == Fraction(3, 4)
    assert m.attributeRichness == Fraction(1, 2)
    assert m.relationshipRichness == Fraction(1, 4)
    empty = schema_metrics(AxiomCensus())
    assert empty.inheritanceRichness is None
    assert format_value(empty.inheritanceRichness) == "undefined"
    assert format_value(Fraction(2, 3)) == "0.666667" and format_value(Fraction(4, 2)) == "2"
    assert json_value(Fraction(1, 4)) == 0.25


def test_diamond():
    g = graph_metrics(hierarchy(4, [(1, 0), (2, 0), (3, 1), (3, 2)]))
    assert g.tangledness == Fraction(1, 4)
    assert g.totalPaths == 2
    assert g.maximalDepth == 3 and g.absoluteDepth == 6
    assert (g.rootCardinality, g.leafCardinality) == (1, 1)


def test_chain():
    g = graph_metrics(hierarchy(3, [(1, 0), (2, 1)]))
    assert (g.maximalDepth, g.totalPaths, g.maximalBreadth) == (3, 1, 1)
    assert g.siblingCardinality == 0


def test_cycle_is_reported():
    with pytest.raises(CycleDetected):
        graph_metrics(hierarchy(2, [(0, 1), (1, 0)]))


def test_self_loop_is_ignored():
    assert graph_metrics(hierarchy(2, [(0, 0), (1, 0)])).totalPaths == 1


def test_fixture_metrics_are_defined():
    for name in kb.MODULES:
        g = kb.load_module(name)
        c = census(g)
        assert c.logicalAxiomTotal > 0
        graph_metrics(g)


# -- properties ---------------------------------------------------------------

@st.composite
def trees(draw):
    n = draw(st.integers(1, 25))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return n, [(i, p) for i, p in enumerate(parents, start=1)]


@st.composite
def dags(draw):
    n = draw(st.integers(1, 12))
    edges = set()
    for i in range(1, n):
        for p in draw(st.sets(st.integers(0, i - 1), max_size=3)):
            edges.add((i, p))
    return n, sorted(edges)


@given(trees())
def test_trees_are_untangled(tree):
    n, edges = tree
    g = graph_metrics(hierarchy(n, edges))
    has_child = {p for _, p in edges}
    assert g.tangledness == 0
    assert g.totalPaths == n - len(has_child)
    assert g.totalPaths == g.leafCardinality


def _enumerate_paths(n, edges):
    parents = {i: [p for c, p in edges if c == i] for i in range(n)}
    children = {i: [c for c, p in edges if p == i] for i in range(n)}
    paths = []

    def walk(node, path):
        if not children[node]:
            paths.append(path)
        for child in children[node]:
            walk(child, path + [child])
    for root in (i for i in range(n) if not parents[i]):
        walk(root, [root])
    return paths


@settings(max_examples=80)
@given(dags())
def test_path_counts_match_enumeration(dag):
    n, edges = dag
    g = graph_metrics(hierarchy(n, edges))
    paths = _enumerate_paths(n, edges)
    assert g.totalPaths == len(paths)
    assert g.absoluteDepth == sum(len(p) for p in paths)
    assert g.maximalDepth == max(len(p) for p in paths)
    assert g.absoluteBreadth == n
    assert g.tangledness == Fraction(sum(1 for i in range(n) if sum(c == i for c, _ in edges) > 1), n)
