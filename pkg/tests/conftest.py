import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).resolve().parent
if str(TESTS_DIR) not in sys.path:
    sys.path.insert(0, str(TESTS_DIR))

from extrukit.turtle import parse_turtle  # noqa: E402

PREFIXES = """\
@prefix : <http://example.org/t#> .
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
"""


@pytest.fixture
def ttl():
    """Parse a Turtle snippet with the common test prefixes prepended."""
    return lambda body: parse_turtle(PREFIXES + body)


def pytest_terminal_summary(terminalreporter):
    try:
        import acceptance_log
    except ImportError:
        return
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=acceptance_log.sort_key):
            terminalreporter.write_line(line)
