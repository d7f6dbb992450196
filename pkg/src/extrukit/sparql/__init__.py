"""A small SPARQL subset: PREFIX, SELECT/ASK, UNION, FILTER, ORDER BY."""
from .ast import Query, Var
from .evaluate import SelectResult, evaluate
from .parser import parse_query
from .results import format_results, tsv_cell

__all__ = ["Query", "Var", "SelectResult", "evaluate", "parse_query", "format_results", "tsv_cell"]
