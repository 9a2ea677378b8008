from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from generators import er_graph, worked_example_graph  # noqa: E402


@st.composite
def random_graphs(draw, min_n=1, max_n=30, max_p=0.6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    p = draw(st.floats(min_value=0.0, max_value=max_p))
    seed = draw(st.integers(min_value=0, max_value=9999))
    return er_graph(n, p, seed)


@pytest.fixture
def worked_example():
    return worked_example_graph()


@pytest.fixture
def worked_example_file(tmp_path):
    """The worked-example graph as an edge-list file, lines ordered so that
    loading reproduces the construction ids exactly."""
    from generators import WORKED_EXAMPLE_EDGES

    path = tmp_path / "worked_example.txt"
    path.write_text("".join(f"{u} {v}\n" for u, v in WORKED_EXAMPLE_EDGES), encoding="ascii")
    return path
