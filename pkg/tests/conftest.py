import numpy as np
import pytest
from hypothesis import settings, strategies as st

from cubepalette.hypercube import Coloring

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("ci")


@st.composite
def colorings(draw, n_min=2, n_max=5, k_min=1, k_max=4, mode="general"):
    n = draw(st.integers(n_min, n_max))
    k = draw(st.integers(k_min, k_max))
    colors = draw(st.lists(st.integers(1, k), min_size=n << (n - 1), max_size=n << (n - 1)))
    return Coloring(n, k, mode, np.array(colors))


@pytest.fixture
def fig1():
    # the two-color H2 drawing, 0 -> 1 and 1 -> 2
    return Coloring(2, 2, "general", np.array([1, 2, 1, 2]))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
