import os
from pathlib import Path

import pytest

from fiberlogic.cli.formats import Workspace, parse_assertion, parse_formula, parse_term
from fiberlogic.cli.sexp import read_one
from fiberlogic.syntax import Context

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# small enough that every structure test stays well under a second
SMALL = "ctx=1,term=1,fml=0,ante=1"


def fx(*parts) -> str:
    return str(FIXTURES.joinpath(*parts))


@pytest.fixture(scope="session")
def ws():
    return Workspace()


@pytest.fixture(scope="session")
def unary(ws):
    return ws.theory(fx("unary.theory"))


@pytest.fixture
def chdir_fixtures():
    old = os.getcwd()
    os.chdir(FIXTURES)
    yield FIXTURES
    os.chdir(old)


def formula(text, T, ctx=()):
    return parse_formula(read_one(text), T.signature, T.language, Context(ctx))


def term(text, T, ctx=()):
    return parse_term(read_one(text), T.signature, Context(ctx))


def assertion(text, T):
    return parse_assertion(read_one(text), T.signature, T.language)


# ------------------------------------------------------ acceptance records

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s{'; ' + detail if detail else ''})")


def pytest_collection_modifyitems(items):
    # the whole-suite timer has to run last
    last = [i for i in items if i.name == "test_criterion_10_suite_time"]
    items[:] = [i for i in items if i not in last] + last
