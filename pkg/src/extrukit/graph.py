"""In-memory triple store with subject, predicate and object indexes."""
from __future__ import annotations

from collections import defaultdict
from typing import Dict, Iterable, Iterator, Mapping, Optional, Set

from .errors import UnknownPrefix
from .terms import BlankNode, Iri, Literal, Subject, Term, Triple, triple

DEFAULT_PREFIXES = {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "owl": "http://www.w3.org/2002/07/owl#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
}


def _index() -> Dict:
    return defaultdict(lambda: defaultdict(set))


class Graph:
    """A set of triples plus a prefix map.

    Three nested-dict indexes (s->p->o, p->o->s, o->s->p) make every
    combination of bound positions a direct lookup. After :meth:`seal` the
    graph rejects writes and can be shared between readers.
    """

    def __init__(self, triples: Iterable[Triple] = (), prefixes: Optional[Mapping[str, str]] = None):
        self._spo = _index()
        self._pos = _index()
        self._osp = _index()
        self._size = 0
        self._sealed = False
        self.prefixes: Dict[str, str] = dict(prefixes or {})
        for t in triples:
            self.add(t)

    # -- writes ---------------------------------------------------------

    def add(self, t: Triple) -> bool:
        """Insert ``t``; return True if it was not already present."""
        if self._sealed:
            raise RuntimeError("graph is sealed")
        s, p, o = t
        objects = self._spo[s][p]
        if o in objects:
            return False
        if not isinstance(t, Triple):
            t = triple(s, p, o)
        objects.add(o)
        self._pos[p][o].add(s)
        self._osp[o][s].add(p)
        self._size += 1
        return True

    insert = add

    def update(self, triples: Iterable[Triple]) -> int:
        return sum(self.add(t) for t in triples)

    def remove(self, t: Triple) -> bool:
        if self._sealed:
            raise RuntimeError("graph is sealed")
        s, p, o = t
        if t not in self:
            return False
        _discard(self._spo, s, p, o)
        _discard(self._pos, p, o, s)
        _discard(self._osp, o, s, p)
        self._size -= 1
        return True

    def bind(self, label: str, namespace: str) -> None:
        self.prefixes[label] = namespace

    def seal(self) -> "Graph":
        self._sealed = True
        return self

    @property
    def sealed(self) -> bool:
        return self._sealed

    # -- reads ----------------------------------------------------------

    def __len__(self) -> int:
        return self._size

    def __contains__(self, t) -> bool:
        s, p, o = t
        by_p = self._spo.get(s)
        if not by_p:
            return False
        objects = by_p.get(p)
        return bool(objects) and o in objects

    def __iter__(self) -> Iterator[Triple]:
        for s, by_p in self._spo.items():
            for p, objects in by_p.items():
                for o in objects:
                    yield Triple(s, p, o)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return len(self) == len(other) and all(t in other for t in self)

    __hash__ = None  # type: ignore[assignment]

    def match(self, s: Optional[Term] = None, p: Optional[Iri] = None,
              o: Optional[Term] = None) -> Iterator[Triple]:
        """Yield triples agreeing with every bound (non-None) position."""
        if s is not None:
            by_p = self._spo.get(s)
            if not by_p:
                return
            if p is not None:
                objects = by_p.get(p, ())
                if o is not None:
                    if o in objects:
                        yield Triple(s, p, o)
                    return
                for obj in list(objects):
                    yield Triple(s, p, obj)
                return
            for pred, objects in list(by_p.items()):
                if o is not None:
                    if o in objects:
                        yield Triple(s, pred, o)
                else:
                    for obj in list(objects):
                        yield Triple(s, pred, obj)
            return
        if p is not None:
            by_o = self._pos.get(p)
            if not by_o:
                return
            if o is not None:
                for subj in list(by_o.get(o, ())):
                    yield Triple(subj, p, o)
                return
            for obj, subjects in list(by_o.items()):
                for subj in list(subjects):
                    yield Triple(subj, p, obj)
            return
        if o is not None:
            by_s = self._osp.get(o)
            if not by_s:
                return
            for subj, preds in list(by_s.items()):
                for pred in list(preds):
                    yield Triple(subj, pred, o)
            return
        yield from list(self)

    triples = match

    def objects(self, s: Optional[Term] = None, p: Optional[Iri] = None) -> Iterator[Term]:
        for t in self.match(s, p, None):
            yield t.object

    def subjects(self, p: Optional[Iri] = None, o: Optional[Term] = None) -> Iterator[Subject]:
        for t in self.match(None, p, o):
            yield t.subject

    def value(self, s: Term, p: Iri) -> Optional[Term]:
        return next(self.objects(s, p), None)

    def predicates(self) -> Set[Iri]:
        return {p for p, by_o in self._pos.items() if by_o}

    def terms(self) -> Set[Term]:
        out: Set[Term] = set()
        for s, p, o in self:
            out.update((s, p, o))
        return out

    def blank_nodes(self) -> Set[BlankNode]:
        return {t for t in self.terms() if isinstance(t, BlankNode)}

    # -- prefixes -------------------------------------------------------

    def expand(self, curie: str) -> Iri:
        """Expand ``label:local`` using this graph's prefix map."""
        label, sep, local = curie.partition(":")
        if not sep:
            raise ValueError(f"not a prefixed name: {curie!r}")
        try:
            namespace = self.prefixes[label]
        except KeyError:
            raise UnknownPrefix(label) from None
        return Iri(namespace + local)

    # -- combination ----------------------------------------------------

    def copy(self) -> "Graph":
        return Graph(self, self.prefixes)

    def merge(self, other: "Graph") -> "Graph":
        """Return a new graph holding both triple sets.

        Blank nodes of ``other`` that collide with labels in ``self`` are
        renamed, so the two documents never share a blank node by accident.
        """
        out = self.copy()
        mapping = _fresh_labels(other.blank_nodes(), self.blank_nodes())
        for s, p, o in other:
            out.add(Triple(mapping.get(s, s), p, mapping.get(o, o)))
        for label, ns in other.prefixes.items():
            out.prefixes.setdefault(label, ns)
        return out

    def __repr__(self) -> str:
        return f"<Graph {len(self)} triples>"


def merge_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph()
    for g in graphs:
        out = out.merge(g)
    return out


def isomorphic(a: Graph, b: Graph) -> bool:
    """Triple-set equality up to a bijective renaming of blank nodes."""
    if len(a) != len(b):
        return False
    ground_a = {t for t in a if not _has_bnode(t)}
    ground_b = {t for t in b if not _has_bnode(t)}
    if ground_a != ground_b:
        return False
    rest_a = [t for t in a if _has_bnode(t)]
    rest_b = {t for t in b if _has_bnode(t)}
    nodes_a, nodes_b = _refine(rest_a), _refine(rest_b)
    if sorted(nodes_a.values()) != sorted(nodes_b.values()):
        return False
    return _search(sorted(nodes_a, key=lambda n: nodes_a[n]), 0, {}, set(), nodes_a, nodes_b, rest_a, rest_b)


def _has_bnode(t: Triple) -> bool:
    return isinstance(t.subject, BlankNode) or isinstance(t.object, BlankNode)


def _refine(triples) -> Dict[BlankNode, int]:
    """Colour refinement: hash each blank node by its neighbourhood until stable."""
    nodes = {n for t in triples for n in (t.subject, t.object) if isinstance(n, BlankNode)}
    colour = {n: 0 for n in nodes}
    for _ in range(len(nodes) + 1):
        sig = {n: [] for n in nodes}
        for s, p, o in triples:
            so = colour.get(o, o) if isinstance(o, BlankNode) else o
            ss = colour.get(s, s) if isinstance(s, BlankNode) else s
            if isinstance(s, BlankNode):
                sig[s].append(("out", p.value, repr(so)))
            if isinstance(o, BlankNode):
                sig[o].append(("in", p.value, repr(ss)))
        new = {n: hash((colour[n], tuple(sorted(sig[n])))) for n in nodes}
        if len(set(new.values())) == len(set(colour.values())):
            colour = new
            break
        colour = new
    return colour


def _search(order, idx, mapping, used, col_a, col_b, rest_a, rest_b) -> bool:
    if idx == len(order):
        return all(Triple(mapping.get(s, s), p, mapping.get(o, o)) in rest_b for s, p, o in rest_a)
    node = order[idx]
    for cand in col_b:
        if cand in used or col_b[cand] != col_a[node]:
            continue
        mapping[node] = cand
        used.add(cand)
        if _search(order, idx + 1, mapping, used, col_a, col_b, rest_a, rest_b):
            return True
        used.discard(cand)
        del mapping[node]
    return False


def _discard(index, a, b, c) -> None:
    inner = index[a][b]
    inner.discard(c)
    if not inner:
        del index[a][b]
        if not index[a]:
            del index[a]


def _fresh_labels(incoming: Set[BlankNode], taken: Set[BlankNode]) -> Dict[BlankNode, BlankNode]:
    used = {b.label for b in taken}
    mapping: Dict[BlankNode, BlankNode] = {}
    counter = 0
    for node in sorted(incoming, key=lambda b: b.label):
        if node.label not in used:
            used.add(node.label)
            continue
        while f"b{counter}" in used:
            counter += 1
        mapping[node] = BlankNode(f"b{counter}")
        used.add(mapping[node].label)
    return mapping


__all__ = ["Graph", "merge_all", "isomorphic", "DEFAULT_PREFIXES", "Iri", "BlankNode", "Literal", "Triple"]
