from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from ..terms import Iri, Term


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


PatternTerm = Union[Term, Var]


@dataclass(frozen=True)
class TriplePattern:
    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm

    def variables(self) -> List[Var]:
        return [t for t in (self.subject, self.predicate, self.object) if isinstance(t, Var)]


@dataclass(frozen=True)
class Const:
    term: Term


@dataclass(frozen=True)
class Compare:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Logical:
    op: str  # "&&" or "||"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Not:
    operand: "Expr"


@dataclass(frozen=True)
class Cast:
    datatype: Iri
    operand: "Expr"


Expr = Union[Var, Const, Compare, Logical, Not, Cast]


@dataclass
class Filter:
    expr: Expr


@dataclass
class Union_:
    branches: List["GroupPattern"]


@dataclass
class GroupPattern:
    elements: List[Union[TriplePattern, Union_, Filter, "GroupPattern"]] = field(default_factory=list)

    def variables(self) -> List[Var]:
        out: List[Var] = []
        for el in self.elements:
            if isinstance(el, TriplePattern):
                found = el.variables()
            elif isinstance(el, Union_):
                found = [v for b in el.branches for v in b.variables()]
            elif isinstance(el, GroupPattern):
                found = el.variables()
            else:
                found = []
            for v in found:
                if v not in out:
                    out.append(v)
        return out


@dataclass
class OrderCondition:
    expr: Expr
    descending: bool = False


@dataclass
class Query:
    form: str  # "SELECT" or "ASK"
    pattern: GroupPattern
    prefixes: Dict[str, str] = field(default_factory=dict)
    projection: Optional[List[Var]] = None  # None means SELECT *
    distinct: bool = False
    order_by: List[OrderCondition] = field(default_factory=list)
    limit: Optional[int] = None
    unbound_projection: Tuple[Var, ...] = ()

    @property
    def variables(self) -> List[Var]:
        if self.projection is None:
            return self.pattern.variables()
        return list(self.projection)
