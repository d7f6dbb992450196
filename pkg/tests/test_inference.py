import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extrukit import kb
from extrukit.errors import MalformedChain
from extrukit.graph import Graph
from extrukit.inference import ClashKind, check_consistency, extract_schema, individuals, materialize
from extrukit.terms import Iri, Literal, Triple

from naive_reasoner import naive_closure, random_graph

EX = "http://example.org/t#"
TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")


def iri(name):
    return Iri(EX + name)


def test_empty_graph():
    assert extract_schema(Graph()).is_empty()
    assert len(materialize(Graph())) == 0


def test_three_element_chain_is_malformed(ttl):
    with pytest.raises(MalformedChain):
        extract_schema(ttl(":p owl:propertyChainAxiom ( :a :b :c ) ."))


def test_broken_list_is_malformed(ttl):
    with pytest.raises(MalformedChain):
        extract_schema(ttl(":p owl:propertyChainAxiom _:l . _:l rdf:first :a ."))


def test_subclass_and_type_inheritance(ttl):
    g = materialize(ttl(":A rdfs:subClassOf :B . :B rdfs:subClassOf :C . :x a :A ."))
    assert Triple(iri("A"), Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf"), iri("C")) in g
    assert Triple(iri("x"), TYPE, iri("C")) in g


def test_subproperty_domain_range(ttl):
    g = materialize(ttl(""":p rdfs:subPropertyOf :q . :q rdfs:domain :D ; rdfs:range :R .
                           :x :p :y . :x :q "lit" ."""))
    assert Triple(iri("x"), iri("q"), iri("y")) in g
    assert Triple(iri("x"), TYPE, iri("D")) in g
    assert Triple(iri("y"), TYPE, iri("R")) in g
    # literals never end up as subjects
    assert not any(isinstance(t.subject, Literal) for t in g)


def test_inverse_symmetric_transitive(ttl):
    g = materialize(ttl(""":hasPart owl:inverseOf :isPartOf ; a owl:TransitiveProperty .
                           :near a owl:SymmetricProperty .
                           :a :hasPart :b . :b :hasPart :c . :a :near :z ."""))
    assert Triple(iri("a"), iri("hasPart"), iri("c")) in g
    assert Triple(iri("c"), iri("isPartOf"), iri("a")) in g
    assert Triple(iri("z"), iri("near"), iri("a")) in g


def test_chain_with_literal_second_leg(ttl):
    g = materialize(ttl(""":t owl:propertyChainAxiom ( :p :q ) .
                           :y :q "v" .
                           :x :p :y ."""))
    assert Triple(iri("x"), iri("t"), Literal("v")) in g


def test_equivalent_classes_are_mutual_subclasses(ttl):
    g = materialize(ttl(":A owl:equivalentClass :B . :x a :B ."))
    assert Triple(iri("x"), TYPE, iri("A")) in g


def test_reflexive_flag(ttl):
    src = ttl(":same a owl:ReflexiveProperty . :a :p :b .")
    assert Triple(iri("a"), iri("same"), iri("a")) not in materialize(src)
    with_flag = materialize(src, reflexive=True)
    assert Triple(iri("a"), iri("same"), iri("a")) in with_flag
    assert Triple(iri("b"), iri("same"), iri("b")) in with_flag
    assert individuals(src) == {iri("a"), iri("b")}


def test_schema_feedback_loop(ttl):
    # a property declared below rdfs:subClassOf produces hierarchy edges mid-run
    g = materialize(ttl(":narrower rdfs:subPropertyOf rdfs:subClassOf . :A :narrower :B . :x a :A ."))
    assert Triple(iri("x"), TYPE, iri("B")) in g


def test_clash_reports(ttl):
    g = materialize(ttl(""":A owl:disjointWith :B . :C rdfs:subClassOf :B .
                           :x a :A , :C .
                           :f a owl:FunctionalProperty . :y :f :one , :two ."""))
    reports = check_consistency(g)
    kinds = sorted(r.kind.value for r in reports)
    assert kinds == ["DisjointClash", "FunctionalViolation"]
    disjoint = next(r for r in reports if r.kind is ClashKind.DISJOINT)
    assert disjoint.individual == iri("x")
    assert str(disjoint).startswith("DisjointClash <http://example.org/t#x>")


def test_fixtures_are_consistent():
    assert check_consistency(materialize(kb.full_kb())) == []


def test_fixture_materialization_is_idempotent():
    closure = materialize(kb.full_kb())
    assert materialize(closure) == closure


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_matches_naive_oracle(seed):
    g = random_graph(random.Random(seed), max_triples=30)
    closure = materialize(g)
    assert set(closure) == naive_closure(g)
    assert set(g) <= set(closure)
    assert len(materialize(closure)) == len(closure)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_monotone_under_added_triples(seed):
    rng = random.Random(seed)
    g = random_graph(rng, max_triples=25)
    extra = random_graph(rng, max_triples=10)
    bigger = g.merge(extra)
    assert set(materialize(g)) <= set(materialize(bigger))
