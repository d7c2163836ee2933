import sys
from pathlib import Path

import pytest
from hypothesis import settings

from plane_curves.cli import corpus_dir
from plane_curves.curvefile import load_curve
from plane_curves.field import QQ, NumberField
from plane_curves.report import analyze

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None)
settings.load_profile("default")

QI = NumberField([1, 0, 1], "i")
QE = NumberField([1, 1, 1], "e")
CORPUS_FIELDS = {"Q": QQ, "Q(i)": QI, "Q(e)": QE}


@pytest.fixture(scope="session")
def corpus_files():
    return {load_curve(p).name: load_curve(p) for p in sorted(corpus_dir().glob("*.curve"))}


@pytest.fixture(scope="session")
def corpus_reports(corpus_files):
    return {name: analyze(cf, mode="auto") for name, cf in corpus_files.items()}


ACCEPTANCE_LINES = []


@pytest.fixture
def verdict_line():
    """Record one PASS/FAIL line; printed now and again in the terminal summary."""
    def record(ok: bool, label: str, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
