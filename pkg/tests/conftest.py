import random

import pytest

from xconn.graph import Graph, is_connected

_ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def criterion():
    """Record one pass/fail line for the terminal summary, then assert."""

    def record(num, ok, detail=""):
        _ACCEPTANCE.append((num, bool(ok), detail))
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, f"criterion {num} failed: {detail}"

    return record


def random_connected_graphs(count, max_n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.15, 0.7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        G = Graph(n, edges)
        if is_connected(G):
            out.append(G)
    return out
