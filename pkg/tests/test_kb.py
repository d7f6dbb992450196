import json
import shutil

import pytest

from extrukit import kb
from extrukit.errors import UnknownModule
from extrukit.inference import materialize
from extrukit.terms import Iri, Triple

E = "http://bdi.si.ehu.es/bdi/ontologies/ExtruOnt/Extruder01#"
C4E = "http://bdi.si.ehu.es/bdi/ontologies/ExtruOnt/components4ExtruOnt#"
TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")


def test_modules_load():
    for name in kb.MODULES:
        assert len(kb.load_module(name)) > 0
    with pytest.raises(UnknownModule):
        kb.load_module("nope")


def test_fixture_files_exist():
    files = kb.fixture_files()
    assert len(files) == 6 and all(p.exists() for p in files)


def test_five_major_systems():
    g = kb.load_module("components")
    sub = Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf")
    systems = {s.value.rsplit("#", 1)[1] for s in g.subjects(sub, Iri(C4E + "ExtruderSystem"))}
    assert systems == {"DriveSystem", "FeedSystem", "ScrewBarrelHeatingSystem", "HeadAndDieAssembly", "ControlSystem"}


def test_inferred_part_of_and_types():
    closure = materialize(kb.full_kb())
    has_part = Iri("http://www.ontologydesignpatterns.org/cp/owl/partof.owl#hasPart")
    assert Triple(Iri(E + "E04"), has_part, Iri(E + "M04")) in closure
    assert Triple(Iri(E + "M04"), TYPE, Iri(C4E + "Motor")) in closure


def test_manifest_shape():
    cases = kb.cq_suite()
    assert len(cases) >= 9
    assert len({c.id for c in cases}) == len(cases)
    for case in cases:
        assert case.query_file.exists()
        assert case.status in {"printed-in-paper", "reconstructed"}
        assert case.expect["kind"] in {"count", "ask", "rows", "firstLast"}


def test_suite_needs_inference_where_declared():
    cases = kb.cq_suite()
    without = {o.case.id: o.passed for o in kb.run_suite(cases, infer=False)}
    for case in cases:
        if case.requires_inference:
            assert not without[case.id], case.id


def test_alternate_fixture_directory(tmp_path):
    for path in kb.fixture_files():
        shutil.copy(path, tmp_path / path.name)
    (tmp_path / kb.INSTANCES).write_text(
        (tmp_path / kb.INSTANCES).read_text(encoding="utf-8").replace(":E04 ", ":E99 "), encoding="utf-8")
    outcomes = {o.case.id: o for o in kb.run_suite(kb.cq_suite(tmp_path))}
    assert not outcomes["CQ1.4"].passed


def test_check_expectation_kinds():
    assert kb.check_expectation({"kind": "ask", "value": True}, True)[0]
    assert not kb.check_expectation({"kind": "ask", "value": True}, False)[0]
    with pytest.raises(ValueError):
        kb.check_expectation({"kind": "mystery"}, True)


def test_manifest_is_valid_json():
    json.loads((kb.CQ_DIR / "manifest.json").read_text(encoding="utf-8"))
