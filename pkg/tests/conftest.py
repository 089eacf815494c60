from pathlib import Path

import pytest

from evo_mt.chunker import load_default_grammar, parse_grammar
from evo_mt.lexicon import load_default_lexicon
from evo_mt.ppmi import build_model, load_model
from evo_mt.tagger import load_default_taglex

DATA = Path(__file__).parent / "data"
PKG_DATA = Path(__file__).parent.parent / "src" / "evo_mt" / "data"

BASE_GRAMMAR = """NP: {<PRP>?<JJ.*>*<NN.*>+}
 CP: {<JJR|JJS>}
 VERB: {<VB.*>}
 THAN: {<IN>}
 COMP:

{<DT>?<NP><RB>?<VERB><DT>?<CP><THAN><DT>
 >?<NP>}
"""

FIXTURE_CORPUS = ["a b", "a b", "a c"]


@pytest.fixture(scope="session")
def base_grammar():
    return parse_grammar(BASE_GRAMMAR)


@pytest.fixture(scope="session")
def fixture_model():
    return build_model(FIXTURE_CORPUS)


@pytest.fixture(scope="session")
def resources():
    return {
        "lex": load_default_lexicon(),
        "model": load_model(PKG_DATA / "model.txt"),
        "taglex": load_default_taglex(),
        "grammar": load_default_grammar(),
    }


# -- acceptance reporting ------------------------------------------------------

_criteria: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "passed": True, "ran": False})
    if report.when == "call":
        entry["ran"] = True
    if report.failed:
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        ok = entry["passed"] and entry["ran"]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {entry['title']}")
