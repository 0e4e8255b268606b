import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from nzcgraph import build_graph  # noqa: E402


def random_graph(rng: random.Random, max_vertices: int = 12):
    nv = rng.randint(0, max_vertices)
    p = rng.random()
    edges = [(u, v) for u in range(nv) for v in range(u + 1, nv) if rng.random() < p]
    return build_graph(nv, edges)


@st.composite
def graphs(draw, max_vertices=10):
    nv = draw(st.integers(0, max_vertices))
    pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(nv, chosen)


@pytest.fixture
def random_graphs():
    rng = random.Random(20241015)
    return [random_graph(rng) for _ in range(200)]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
