import random

import pytest
from hypothesis import strategies as st


def random_delta(rng, max_total=40, max_sigma=12, max_alpha=8):
    """A random valid first difference: staircase 1..a, then a nonincreasing tail."""
    while True:
        a = rng.randint(1, max_alpha)
        vals = list(range(1, a + 1))
        cur = a
        while rng.random() < 0.8 and len(vals) <= max_sigma:
            cur = rng.randint(1, cur)
            vals.append(cur)
        if sum(vals) <= max_total and len(vals) <= max_sigma + 1:
            return tuple(vals)


def delta_suite(n, seed, **kw):
    rng = random.Random(seed)
    return [random_delta(rng, **kw) for _ in range(n)]


@st.composite
def valid_deltas(draw, max_alpha=10, max_sigma=20):
    a = draw(st.integers(1, max_alpha))
    tail_len = draw(st.integers(0, max(0, max_sigma + 1 - a)))
    tail = sorted(draw(st.lists(st.integers(1, a), min_size=tail_len, max_size=tail_len)),
                  reverse=True)
    return tuple(range(1, a + 1)) + tuple(tail)


# one PASS/FAIL line per acceptance criterion, printed at the end of the run

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    failed = rep.failed
    if rep.when == "call" or failed:
        prev = _criteria.get(n, (True, item.name))
        _criteria[n] = (prev[0] and not failed, prev[1])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok, name = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  ({name})")
