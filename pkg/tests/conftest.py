import os
import pathlib

import pytest
from hypothesis import HealthCheck, settings

from lelong.graph import ade_graph, ade_parameters, parse_instance

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CORPUS = pathlib.Path(__file__).resolve().parents[1] / "src" / "lelong" / "corpus"

# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def corpus_graphs():
    return [parse_instance(p.read_bytes()) for p in sorted(CORPUS.glob("*.json"))]


@pytest.fixture(scope="session")
def all_ade():
    return [ade_graph(f, k) for f, k in ade_parameters()]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
