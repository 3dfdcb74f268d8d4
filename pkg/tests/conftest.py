import random

import pytest
from hypothesis import settings, strategies as st

from updomatic.generators import random_split, random_tree, random_unicyclic
from updomatic.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def trees(draw, min_n=1, max_n=9):
    return random_tree(draw(st.integers(min_n, max_n)), draw(st.integers(0, 2**30)))


@st.composite
def unicyclic_graphs(draw, min_n=3, max_n=9):
    return random_unicyclic(draw(st.integers(min_n, max_n)), draw(st.integers(0, 2**30)))


@st.composite
def split_graphs(draw, min_n=1, max_n=9):
    return random_split(draw(st.integers(min_n, max_n)), draw(st.integers(0, 2**30)))


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
