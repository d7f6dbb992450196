"""Evaluation of parsed queries against a graph."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..graph import Graph
from ..terms import BlankNode, Literal, Term
from . import values
from .ast import (Cast, Compare, Const, Expr, Filter, GroupPattern, Logical, Not, Query, TriplePattern,
                  Union_, Var)
from .values import XSD_BOOLEAN, ExprError

Solution = Dict[Var, Term]

_TRUE = Literal("true", XSD_BOOLEAN)
_FALSE = Literal("false", XSD_BOOLEAN)


@dataclass
class SelectResult:
    vars: List[Var]
    rows: List[Tuple[Optional[Term], ...]]

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> List[Optional[Term]]:
        idx = [v.name for v in self.vars].index(name)
        return [row[idx] for row in self.rows]


def evaluate(query: Query, graph: Graph) -> Union[SelectResult, bool]:
    solutions = eval_group(query.pattern, graph, [{}])
    if query.form == "ASK":
        return bool(solutions)
    out_vars = [v for v in query.variables if not v.name.startswith("#")]
    if query.order_by:
        # stable sorts applied from the least to the most significant key
        for cond in reversed(query.order_by):
            solutions.sort(key=lambda s, c=cond: values.order_key(_try_eval(c.expr, s)), reverse=cond.descending)
    rows = [tuple(s.get(v) for v in out_vars) for s in solutions]
    if query.distinct:
        seen = set()
        deduped = []
        for row in rows:
            if row not in seen:
                seen.add(row)
                deduped.append(row)
        rows = deduped
    if query.limit is not None:
        rows = rows[:query.limit]
    return SelectResult(out_vars, rows)


def eval_group(group: GroupPattern, graph: Graph, seed: List[Solution]) -> List[Solution]:
    solutions = seed
    filters: List[Expr] = []
    for element in group.elements:
        if isinstance(element, TriplePattern):
            solutions = _extend(solutions, element, graph)
        elif isinstance(element, Filter):
            filters.append(element.expr)
        elif isinstance(element, Union_):
            branch_rows: List[Solution] = []
            for branch in element.branches:
                branch_rows.extend(eval_group(branch, graph, [{}]))
            solutions = join(solutions, branch_rows)
        else:
            solutions = join(solutions, eval_group(element, graph, [{}]))
        if not solutions:
            return []
    for expr in filters:
        solutions = [s for s in solutions if filter_passes(expr, s)]
    return solutions


def _extend(solutions: Iterable[Solution], pattern: TriplePattern, graph: Graph) -> List[Solution]:
    out: List[Solution] = []
    for sol in solutions:
        s = _bind(pattern.subject, sol)
        p = _bind(pattern.predicate, sol)
        o = _bind(pattern.object, sol)
        if isinstance(s, Literal) or isinstance(p, (Literal, BlankNode)):
            continue
        for ts, tp, to in graph.match(s, p, o):
            new = dict(sol)
            if _unify(new, pattern.subject, ts) and _unify(new, pattern.predicate, tp) and _unify(new, pattern.object, to):
                out.append(new)
    return out


def _bind(position, sol: Solution) -> Optional[Term]:
    if isinstance(position, Var):
        return sol.get(position)
    return position


def _unify(sol: Solution, position, term: Term) -> bool:
    if not isinstance(position, Var):
        return True
    bound = sol.get(position)
    if bound is None:
        sol[position] = term
        return True
    return bound == term


def join(left: List[Solution], right: List[Solution]) -> List[Solution]:
    out: List[Solution] = []
    for a in left:
        for b in right:
            if all(a[v] == t for v, t in b.items() if v in a):
                merged = dict(a)
                merged.update(b)
                out.append(merged)
    return out


def filter_passes(expr: Expr, sol: Solution) -> bool:
    try:
        return values.effective_boolean(eval_expr(expr, sol))
    except ExprError:
        return False


def _try_eval(expr: Expr, sol: Solution) -> Optional[Term]:
    try:
        return eval_expr(expr, sol)
    except ExprError:
        return None


def eval_expr(expr: Expr, sol: Solution) -> Term:
    if isinstance(expr, Var):
        if expr not in sol:
            raise ExprError(f"unbound variable {expr}")
        return sol[expr]
    if isinstance(expr, Const):
        return expr.term
    if isinstance(expr, Compare):
        left = eval_expr(expr.left, sol)
        right = eval_expr(expr.right, sol)
        return _TRUE if values.compare(expr.op, left, right) else _FALSE
    if isinstance(expr, Logical):
        # SPARQL three-valued logic: an error on one side can be rescued by the other
        results = []
        for side in (expr.left, expr.right):
            try:
                results.append(values.effective_boolean(eval_expr(side, sol)))
            except ExprError:
                results.append(None)
        a, b = results
        if expr.op == "&&":
            if a is False or b is False:
                return _FALSE
            if a is None or b is None:
                raise ExprError("error in conjunction")
            return _TRUE
        if a is True or b is True:
            return _TRUE
        if a is None or b is None:
            raise ExprError("error in disjunction")
        return _FALSE
    if isinstance(expr, Not):
        return _FALSE if values.effective_boolean(eval_expr(expr.operand, sol)) else _TRUE
    if isinstance(expr, Cast):
        return values.cast(expr.datatype.value, eval_expr(expr.operand, sol))
    raise ExprError(f"unsupported expression {expr!r}")

