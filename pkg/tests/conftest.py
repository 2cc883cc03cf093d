import random

import pytest
from hypothesis import strategies as st

from mtsearch.domains import EXAMPLE_TREE, load_tree

from oracle import body_text, random_body

# criterion number -> (ok, detail); printed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def tree_of(body, root_is_max=True):
    head = "root: max\n" if root_is_max else "root: min\n"
    return load_tree(head + body_text(body))


@st.composite
def tree_bodies(draw, max_width=4, max_depth=5):
    seed = draw(st.integers(0, 2**32 - 1))
    width = draw(st.integers(1, max_width))
    depth = draw(st.integers(1, max_depth))
    return random_body(random.Random(seed), width, depth)


@pytest.fixture
def fixture_tree():
    return load_tree(EXAMPLE_TREE)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
