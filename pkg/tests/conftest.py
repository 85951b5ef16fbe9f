import re

import pytest

_ACCEPTANCE: dict[int, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if m:
        _ACCEPTANCE.setdefault(int(m.group(1)), []).append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        parts = _ACCEPTANCE[num]
        ok = all(outcome == "passed" for _, outcome in parts)
        bad = [name for name, outcome in parts if outcome != "passed"]
        detail = f"  (failed: {', '.join(bad)})" if bad else ""
        tr.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}{detail}")


@pytest.fixture(scope="session")
def spf_table():
    """Smallest prime factor of every n <= 10**6, by a plain sieve."""
    limit = 10**6
    spf = list(range(limit + 1))
    i = 2
    while i * i <= limit:
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf
