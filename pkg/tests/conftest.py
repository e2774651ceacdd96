from functools import lru_cache

import pytest

from giq.pipeline import run_pipeline
from giq.problem import p1_sl2_problem, pn_cstar_problem

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def _preset_report(kind: str, args: tuple, order: str):
    spec = pn_cstar_problem(*args) if kind == "pn" else p1_sl2_problem(*args)
    return run_pipeline(spec, order)


@pytest.fixture(scope="session")
def preset_report():
    """Cached full pipeline run: ``preset_report("pn", (3, 2, 3), "lex")``."""
    return _preset_report


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
