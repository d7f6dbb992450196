"""TSV and SPARQL-JSON rendering of query results."""
from __future__ import annotations

import json
from typing import Optional, Union

from ..terms import XSD, XSD_STRING, BlankNode, Iri, Term, escape_string
from .evaluate import SelectResult

_BARE_DATATYPES = {XSD + "integer", XSD + "decimal", XSD + "boolean"}


def tsv_cell(term: Optional[Term]) -> str:
    """Encode one term as a TSV cell; unbound is the empty string."""
    if term is None:
        return ""
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    if term.datatype in _BARE_DATATYPES:
        return term.lexical
    text = '"' + escape_string(term.lexical) + '"'
    if term.language is not None:
        return f"{text}@{term.language}"
    if term.datatype == XSD_STRING:
        return text
    return f"{text}^^<{term.datatype}>"


def _json_term(term: Term) -> dict:
    if isinstance(term, Iri):
        return {"type": "uri", "value": term.value}
    if isinstance(term, BlankNode):
        return {"type": "bnode", "value": term.label}
    out = {"type": "literal", "value": term.lexical}
    if term.language is not None:
        out["xml:lang"] = term.language
    elif term.datatype != XSD_STRING:
        out["datatype"] = term.datatype
    return out


def format_results(result: Union[SelectResult, bool], fmt: str = "tsv") -> str:
    if fmt not in ("tsv", "json"):
        raise ValueError(f"unknown result format {fmt!r}")
    if isinstance(result, bool):
        if fmt == "json":
            return json.dumps({"head": {}, "boolean": result}, indent=2) + "\n"
        return ("true" if result else "false") + "\n"
    if fmt == "json":
        names = [v.name for v in result.vars]
        bindings = [
            {name: _json_term(term) for name, term in zip(names, row) if term is not None}
            for row in result.rows
        ]
        doc = {"head": {"vars": names}, "results": {"bindings": bindings}}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    lines = ["\t".join(f"?{v.name}" for v in result.vars)]
    lines.extend("\t".join(tsv_cell(t) for t in row) for row in result.rows)
    return "\n".join(lines) + "\n"
