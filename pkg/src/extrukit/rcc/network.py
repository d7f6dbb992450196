"""Qualitative constraint networks over RCC8 and path consistency."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..errors import ContradictoryAssertion
from ..graph import Graph
from ..terms import OWL_NS, RDF_TYPE, Iri, Term
from . import kernels
from .algebra import ALL, CONVERSE_BITS, SET_COMPOSITION, Rcc8, converse, converse_bits, names, to_bits

EQ_BIT = Rcc8.EQ.bit


@dataclass
class QCN:
    """Named regions plus a matrix of RCC8 bitsets.

    ``constraint[j][i]`` is always the converse of ``constraint[i][j]``;
    use :meth:`constrain` rather than writing the matrix directly.
    """

    nodes: List[str]
    constraint: List[List[int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        n = len(self.nodes)
        if len(set(self.nodes)) != n:
            raise ValueError("duplicate node names")
        if not self.constraint:
            self.constraint = [[EQ_BIT if i == j else ALL for j in range(n)] for i in range(n)]
        self._index = {name: i for i, name in enumerate(self.nodes)}

    def index(self, name: str) -> int:
        return self._index[name]

    def __len__(self) -> int:
        return len(self.nodes)

    def get(self, a: str, b: str) -> int:
        return self.constraint[self._index[a]][self._index[b]]

    def constrain(self, a: str, b: str, bits: int) -> None:
        """Intersect the (a, b) cell with ``bits`` and keep the converse in step."""
        i, j = self._index[a], self._index[b]
        cell = self.constraint[i][j] & bits
        self.constraint[i][j] = cell
        self.constraint[j][i] = converse_bits(cell)

    def copy(self) -> "QCN":
        return QCN(list(self.nodes), [row[:] for row in self.constraint])

    def to_bytes(self) -> bytearray:
        return bytearray(cell for row in self.constraint for cell in row)

    @classmethod
    def from_bytes(cls, nodes: List[str], cells: bytes) -> "QCN":
        n = len(nodes)
        return cls(list(nodes), [list(cells[i * n:(i + 1) * n]) for i in range(n)])

    def check_invariants(self) -> bool:
        n = len(self.nodes)
        for i in range(n):
            if self.constraint[i][i] & ~EQ_BIT:
                return False
            for j in range(n):
                if self.constraint[j][i] != converse_bits(self.constraint[i][j]):
                    return False
        return True

    def to_json(self) -> dict:
        constraints = []
        n = len(self.nodes)
        for i in range(n):
            for j in range(i + 1, n):
                cell = self.constraint[i][j]
                if cell != ALL:
                    constraints.append({"i": self.nodes[i], "j": self.nodes[j], "relations": names(cell)})
        return {"nodes": list(self.nodes), "constraints": constraints}

    @classmethod
    def from_json(cls, data: dict) -> "QCN":
        net = cls(list(data["nodes"]))
        for entry in data.get("constraints", []):
            bits = to_bits(Rcc8.parse(r) for r in entry["relations"])
            net.constrain(entry["i"], entry["j"], bits)
        return net


def load_qcn(path) -> QCN:
    with open(path, encoding="utf-8") as fh:
        return QCN.from_json(json.load(fh))


def path_consistency(net: QCN) -> Tuple[bool, QCN]:
    """Apply c[i][j] &= c[i][k] o c[k][j] until nothing changes.

    Returns ``(False, partially refined net)`` when some cell empties.
    """
    cells = net.to_bytes()
    ok = kernels.path_consistency(cells, len(net), SET_COMPOSITION, CONVERSE_BITS)
    return ok, QCN.from_bytes(net.nodes, cells)


def network_from_graph(graph: Graph, vocabulary: Graph) -> QCN:
    """Lift asserted base-relation triples into a network.

    ``vocabulary`` supplies the IRI of each base-relation property; it is
    matched by local name (``rcc8dc`` ... ``rcc8eq``).
    """
    props = base_relation_properties(vocabulary)
    seen: Dict[Tuple[Term, Term], Rcc8] = {}
    for prop, rel in props.items():
        for s, _, o in graph.match(None, prop, None):
            if s == o:
                continue
            for key, r in (((s, o), rel), ((o, s), converse(rel))):
                prev = seen.get(key)
                if prev is not None and prev != r:
                    raise ContradictoryAssertion(
                        f"{_name(key[0])} {_name(key[1])}: both {prev.name} and {r.name} asserted")
                seen[key] = r
    nodes = sorted({_name(t) for pair in seen for t in pair})
    net = QCN(nodes)
    for (a, b), rel in seen.items():
        net.constrain(_name(a), _name(b), rel.bit)
    return net


def base_relation_properties(vocabulary: Graph) -> Dict[Iri, Rcc8]:
    wanted = {f"rcc8{r.name.lower()}": r for r in Rcc8}
    out = {}
    for prop in vocabulary.subjects(RDF_TYPE, OWL_NS.ObjectProperty):
        if isinstance(prop, Iri):
            local = prop.value.rsplit("#", 1)[-1]
            if local in wanted:
                out[prop] = wanted[local]
    return out


def _name(term: Term) -> str:
    value = getattr(term, "value", None)
    if value is not None:
        return value
    return str(term)
