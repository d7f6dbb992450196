"""The ExtruOnt knowledge base: Turtle modules, sample instances and the CQ suite."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from ..errors import UnknownModule
from ..graph import Graph, merge_all
from ..inference import materialize
from ..sparql import SelectResult, evaluate, parse_query, tsv_cell
from ..turtle import parse_file, serialize_turtle

PACKAGE_DIR = Path(__file__).resolve().parent
FIXTURES_DIR = PACKAGE_DIR / "fixtures"
CQ_DIR = PACKAGE_DIR / "cq"

MODULES: Dict[str, str] = {
    "components": "components.ttl",
    "spatial": "spatial.ttl",
    "om-subset": "om-subset.ttl",
    "sensors": "sensors.ttl",
    "x3d-subset": "x3d-subset.ttl",
}
INSTANCES = "instances.ttl"
VOCABULARY_MODULES = tuple(MODULES)


def module_path(name: str, fixtures: Optional[Path] = None) -> Path:
    if name not in MODULES:
        raise UnknownModule(name)
    return Path(fixtures or FIXTURES_DIR) / MODULES[name]


def load_module(name: str, fixtures: Optional[Path] = None) -> Graph:
    return parse_file(module_path(name, fixtures))


def sample_instances(fixtures: Optional[Path] = None) -> Graph:
    return parse_file(Path(fixtures or FIXTURES_DIR) / INSTANCES)


def fixture_files(fixtures: Optional[Path] = None) -> List[Path]:
    base = Path(fixtures or FIXTURES_DIR)
    return [base / MODULES[name] for name in VOCABULARY_MODULES] + [base / INSTANCES]


def full_kb(fixtures: Optional[Path] = None) -> Graph:
    """All vocabulary modules merged with the sample instances (not materialized)."""
    return merge_all(parse_file(p) for p in fixture_files(fixtures))


def spatial_module_text() -> str:
    """The spatial module as written to disk: the serialized vocabulary graph."""
    from ..rcc.vocabulary import vocabulary_graph
    return serialize_turtle(vocabulary_graph())


def regenerate_spatial(fixtures: Optional[Path] = None) -> Path:
    path = module_path("spatial", fixtures)
    path.write_text(spatial_module_text(), encoding="utf-8")
    return path


# -- competency questions ---------------------------------------------------

@dataclass
class CqCase:
    id: str
    query_file: Path
    datasets: List[Path]
    expect: dict
    requires_inference: bool
    status: str
    note: str = ""

    @property
    def query_text(self) -> str:
        return self.query_file.read_text(encoding="utf-8")


@dataclass
class CqOutcome:
    case: CqCase
    passed: bool
    actual: object
    detail: str = ""


def cq_suite(fixtures: Optional[Path] = None, cq_dir: Optional[Path] = None) -> List[CqCase]:
    cq_dir = Path(cq_dir or CQ_DIR)
    base = Path(fixtures or FIXTURES_DIR)
    entries = json.loads((cq_dir / "manifest.json").read_text(encoding="utf-8"))
    return [
        CqCase(
            id=e["id"],
            query_file=cq_dir / e["query"],
            datasets=[base / d for d in e["data"]],
            expect=e["expect"],
            requires_inference=bool(e["requiresInference"]),
            status=e["status"],
            note=e.get("note", ""),
        )
        for e in entries
    ]


class _GraphCache:
    """Parses and materializes each distinct dataset list once per run."""

    def __init__(self) -> None:
        self._cache: Dict[tuple, Graph] = {}

    def get(self, paths: Sequence[Path], infer: bool) -> Graph:
        key = (tuple(str(p) for p in paths), infer)
        if key not in self._cache:
            graph = merge_all(parse_file(p) for p in paths)
            if infer:
                graph = materialize(graph)
            graph.seal()
            self._cache[key] = graph
        return self._cache[key]


def run_case(case: CqCase, infer: bool = True, cache: Optional[_GraphCache] = None) -> CqOutcome:
    cache = cache or _GraphCache()
    graph = cache.get(case.datasets, infer)
    result = evaluate(parse_query(case.query_text), graph)
    passed, detail = check_expectation(case.expect, result)
    return CqOutcome(case, passed, result, detail)


def run_suite(cases: Sequence[CqCase], infer: bool = True) -> List[CqOutcome]:
    cache = _GraphCache()
    return [run_case(c, infer, cache) for c in cases]


def _encoded(result: SelectResult) -> List[List[str]]:
    return [[tsv_cell(t) for t in row] for row in result.rows]


def check_expectation(expect: dict, result: Union[SelectResult, bool]) -> tuple:
    """Compare a query result with a manifest expectation; returns (ok, detail)."""
    kind = expect["kind"]
    if kind not in ("ask", "count", "rows", "firstLast"):
        raise ValueError(f"unknown expectation kind {kind!r}")
    if kind == "ask":
        if not isinstance(result, bool):
            return False, "expected an ASK result"
        return result == expect["value"], f"got {str(result).lower()}"
    if isinstance(result, bool):
        return False, "expected a SELECT result"
    rows = _encoded(result)
    if kind == "count":
        return len(rows) == expect["value"], f"got {len(rows)} rows"
    if kind == "rows":
        names = [v.name for v in result.vars]
        if names != expect["vars"]:
            return False, f"got variables {names}"
        wanted = [list(r) for r in expect["rows"]]
        ok = rows == wanted if expect.get("ordered") else sorted(rows) == sorted(wanted)
        return ok, f"got {len(rows)} rows"
    column = [tsv_cell(t) for t in result.column(expect["var"])]  # firstLast
    if not column:
        return False, "got no rows"
    ok = column[0] == expect["first"] and column[-1] == expect["last"]
    return ok, f"first {column[0]} last {column[-1]}"


__all__ = [
    "MODULES", "FIXTURES_DIR", "CQ_DIR", "CqCase", "CqOutcome", "load_module", "sample_instances",
    "fixture_files", "full_kb", "cq_suite", "run_case", "run_suite", "check_expectation",
    "spatial_module_text", "regenerate_spatial", "module_path",
]
