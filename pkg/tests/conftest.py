import random

import pytest
from hypothesis import strategies as st

from cycext.graph import Graph

ACCEPTANCE = {}


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    names = [f"v{i}" for i in range(n)]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(names, edges)


def random_corpus(count: int, n_min: int, n_max: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, rng.randint(n_min, n_max), rng.choice([0.3, 0.5, 0.7]))


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    names = [f"v{i}" for i in range(n)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(names, [e for e, k in zip(pairs, keep) if k])


@pytest.fixture
def record_acceptance(request):
    def record(key, ok, detail=""):
        ACCEPTANCE[key] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0][2:])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key} {detail}")
