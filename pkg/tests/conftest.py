import re
from collections import defaultdict

import pytest

_CRITERIA = defaultdict(list)
_TITLES = {
    1: "counting: triangulations and colored triangulations, n = 0..5",
    2: "cyclohedron graph vertex and edge counts, n = 1..3",
    3: "graph hypotheses: regular, properly colored, connected",
    4: "polytope axioms: diamond, flags, flag-connectivity, simplicity",
    5: "surface data of the colorful 3-associahedron",
    6: "surface data of the colorful 2-cyclohedron",
    7: "facet families and intersection counts",
    8: "quotients, isomorphisms and coverings",
    9: "automorphism groups",
    10: "property suite: involution, refinement, blocks",
}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = re.match(r"test_criterion_(\d+)", item.name)
    if m and (rep.when == "call" or (rep.when == "setup" and not rep.passed)):
        _CRITERIA[int(m.group(1))].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        results = _CRITERIA[k]
        ok = all(p for _, p in results)
        line = f"criterion {k:2d} [{'PASS' if ok else 'FAIL'}] {_TITLES.get(k, '')} ({sum(p for _, p in results)}/{len(results)} checks)"
        tr.write_line(line)
        for name, p in results:
            if not p:
                tr.write_line(f"    failed: {name}")
