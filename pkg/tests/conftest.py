"""Per-criterion PASS/FAIL summary for tests marked ``acceptance(n)``."""

from collections import defaultdict

from hypothesis import settings

settings.register_profile("planecurves", deadline=None)
settings.load_profile("planecurves")

_NAMES = {
    1: "soundness on generated intersection sets",
    2: "rejection of negatives with re-checked certificates",
    3: "Cayley-Bacharach properties on true sets",
    4: "Noether decomposition identity",
    5: "small-set independence and collinear-run cross-check",
    6: "vanishing dimension formula on the corpus",
    7: "rank against the minor oracle",
    8: "byte-identical corpus reruns",
}

_outcomes = defaultdict(list)
_notes = defaultdict(list)
_criterion_of = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            _criterion_of[item.nodeid] = mark.args[0]


def pytest_deselected(items):
    for item in items:
        _criterion_of.pop(item.nodeid, None)


def pytest_runtest_logreport(report):
    n = _criterion_of.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[n].append(report.outcome)
        _notes[n].extend(f"{k}={v}" for k, v in report.user_properties)


def pytest_terminal_summary(terminalreporter):
    if not _criterion_of:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(set(_criterion_of.values())):
        outcomes = _outcomes.get(n, [])
        ok = bool(outcomes) and all(o == "passed" for o in outcomes)
        status = "PASS" if ok else ("NOT RUN" if not outcomes else "FAIL")
        note = f"  [{', '.join(_notes[n])}]" if _notes[n] else ""
        terminalreporter.write_line(f"criterion {n}: {status}  {_NAMES.get(n, '')}{note}")
