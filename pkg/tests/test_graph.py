import pytest
from hypothesis import given
from hypothesis import strategies as st

from extrukit.errors import UnknownPrefix
from extrukit.graph import Graph, isomorphic, merge_all
from extrukit.terms import BlankNode, Iri, Literal, Triple, namespace_of, triple

from strategies import graphs, triples

EX = "http://example.org/g#"
a, b, c, p, q = (Iri(EX + n) for n in "abcpq")


def test_literal_defaults_and_language():
    assert Literal("x").datatype.endswith("#string")
    tagged = Literal("hola", language="es")
    assert tagged.datatype.endswith("#langString")
    assert str(tagged) == '"hola"@es'
    with pytest.raises(ValueError):
        Literal("x", datatype="http://www.w3.org/2001/XMLSchema#integer", language="en")


def test_invalid_terms_are_rejected():
    with pytest.raises(ValueError):
        Iri("has space")
    with pytest.raises(ValueError):
        BlankNode("")
    with pytest.raises(TypeError):
        triple(Literal("s"), p, a)


def test_namespace_of():
    assert namespace_of("http://x.org/onto#Thing") == "http://x.org/onto#"
    assert namespace_of("http://x.org/res/Thing") == "http://x.org/res/"


def test_match_every_binding_pattern():
    g = Graph([Triple(a, p, b), Triple(a, q, c), Triple(b, p, c)])
    assert set(g.match(a, None, None)) == {Triple(a, p, b), Triple(a, q, c)}
    assert set(g.match(None, p, None)) == {Triple(a, p, b), Triple(b, p, c)}
    assert set(g.match(None, None, c)) == {Triple(a, q, c), Triple(b, p, c)}
    assert list(g.match(a, p, b)) == [Triple(a, p, b)]
    assert list(g.match(a, p, c)) == []
    assert set(g.match(a, None, c)) == {Triple(a, q, c)}
    assert set(g.match(None, p, c)) == {Triple(b, p, c)}
    assert len(list(g.match())) == 3


def test_remove_and_seal():
    g = Graph([Triple(a, p, b)])
    assert g.remove(Triple(a, p, b))
    assert not g.remove(Triple(a, p, b))
    assert len(g) == 0 and list(g.match(None, p, None)) == []
    g.add(Triple(a, p, c))
    g.seal()
    with pytest.raises(RuntimeError):
        g.add(Triple(b, p, c))


def test_expand_unknown_prefix():
    g = Graph(prefixes={"ex": EX})
    assert g.expand("ex:a") == a
    with pytest.raises(UnknownPrefix):
        g.expand("nope:a")


def test_merge_keeps_blank_nodes_apart():
    left = Graph([Triple(BlankNode("n"), p, a)])
    right = Graph([Triple(BlankNode("n"), p, b)])
    merged = left.merge(right)
    assert len(merged) == 2
    assert len(merged.blank_nodes()) == 2


def test_isomorphism_needs_consistent_renaming():
    x, y = BlankNode("x"), BlankNode("y")
    g1 = Graph([Triple(x, p, y), Triple(y, p, x)])
    g2 = Graph([Triple(BlankNode("u"), p, BlankNode("v")), Triple(BlankNode("v"), p, BlankNode("u"))])
    g3 = Graph([Triple(x, p, y), Triple(y, p, BlankNode("w"))])
    assert isomorphic(g1, g2)
    assert not isomorphic(g1, g3)


def test_isomorphism_regular_structures():
    # two 3-cycles versus one 6-cycle: colour refinement alone cannot tell these apart
    def cycle(labels):
        return [Triple(BlankNode(labels[i]), p, BlankNode(labels[(i + 1) % len(labels)])) for i in range(len(labels))]
    two_triangles = Graph(cycle("abc") + cycle("def"))
    hexagon = Graph(cycle("uvwxyz"))
    assert not isomorphic(two_triangles, hexagon)
    assert isomorphic(hexagon, Graph(cycle("123456")))


@given(st.lists(triples, max_size=30))
def test_insert_then_contains(ts):
    g = Graph()
    for t in ts:
        g.add(t)
    assert all(t in g for t in ts)
    assert len(g) == len(set(ts))
    for t in ts:
        assert t in set(g.match(t.subject, None, None))
        assert t in set(g.match(None, t.predicate, None))
        assert t in set(g.match(None, None, t.object))


@given(graphs, graphs)
def test_merge_size_is_bounded(g1, g2):
    merged = g1.merge(g2)
    assert max(len(g1), len(g2)) <= len(merged) <= len(g1) + len(g2)
    ground = {t for t in g1 if not any(isinstance(x, BlankNode) for x in t)}
    assert ground <= set(merged)


@given(graphs)
def test_isomorphic_to_relabelled_copy(g):
    relabel = {n: BlankNode("r" + n.label) for n in g.blank_nodes()}
    copy = Graph(Triple(relabel.get(s, s), pp, relabel.get(o, o)) for s, pp, o in g)
    assert isomorphic(g, copy)


def test_merge_all_of_nothing():
    assert len(merge_all([])) == 0
