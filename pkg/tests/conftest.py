import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from softconvex import GridBox, SoftSet, Universe, make_soft_set

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

EXAMPLE_UNIVERSE = Universe(tuple(f"u{i}" for i in range(1, 7)))
EXAMPLE_BOX = GridBox((1,), (5,))

S_DOC = """{
  "universe": ["u1", "u2", "u3", "u4", "u5", "u6"],
  "dim": 1,
  "box": {"min": [1], "max": [5]},
  "entries": [
    {"point": [1], "set": ["u1", "u2", "u3"]},
    {"point": [2], "set": ["u1", "u4"]},
    {"point": [4], "set": ["u1", "u2", "u3", "u4", "u5", "u6"]}
  ]
}
"""

T_DOC = """{
  "universe": ["u1", "u2", "u3", "u4", "u5", "u6"],
  "dim": 1,
  "box": {"min": [1], "max": [5]},
  "entries": [
    {"point": [1], "set": ["u1", "u2", "u6"]},
    {"point": [2], "set": ["u1", "u2", "u3"]},
    {"point": [3], "set": ["u1", "u2"]},
    {"point": [5], "set": ["u6"]}
  ]
}
"""


def _soft(universe, box, table):
    return make_soft_set(universe, box.dim, box, [((p,), universe.subset(v)) for p, v in table])


@pytest.fixture
def example_s():
    u = EXAMPLE_UNIVERSE
    return _soft(u, EXAMPLE_BOX, [(1, ["u1", "u2", "u3"]), (2, ["u1", "u4"]), (4, u.elements)])


@pytest.fixture
def example_t():
    return _soft(EXAMPLE_UNIVERSE, EXAMPLE_BOX, [
        (1, ["u1", "u2", "u6"]), (2, ["u1", "u2", "u3"]), (3, ["u1", "u2"]), (5, ["u6"]),
    ])


@pytest.fixture
def gap_set():
    """dim 1, box [0,2], f(0) = f(2) = {u1}, f(1) empty."""
    u = Universe(("u1",))
    return _soft(u, GridBox((0,), (2,)), [(0, ["u1"]), (2, ["u1"])])


@pytest.fixture
def bump_set():
    """dim 1, box [0,2], f(1) = {u1}, others empty."""
    u = Universe(("u1",))
    return _soft(u, GridBox((0,), (2,)), [(1, ["u1"])])


@st.composite
def carriers(draw, max_dim=2, max_side=4, max_m=4):
    dim = draw(st.integers(1, max_dim))
    lo = tuple(draw(st.integers(-2, 2)) for _ in range(dim))
    hi = tuple(a + draw(st.integers(0, max_side - 1)) for a in lo)
    m = draw(st.integers(1, max_m))
    return Universe(tuple(f"e{i}" for i in range(m))), GridBox(lo, hi)


@st.composite
def soft_sets_on(draw, carrier):
    universe, box = carrier
    masks = {p: draw(st.integers(0, universe.full_mask)) for p in box.points()}
    return SoftSet(universe, box, masks)


@st.composite
def soft_sets(draw, **kw):
    return draw(soft_sets_on(draw(carriers(**kw))))


@st.composite
def soft_set_pairs(draw, **kw):
    carrier = draw(carriers(**kw))
    return draw(soft_sets_on(carrier)), draw(soft_sets_on(carrier))


# acceptance lines, printed once at the end of the session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
