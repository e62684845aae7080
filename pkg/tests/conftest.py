import numpy as np
import pytest
from hypothesis import strategies as st

from prefrep import Relation, make_relation
from prefrep.relation import default_labels

DIAG = [("a", "a"), ("b", "b"), ("c", "c")]


@pytest.fixture
def example1():
    """Non-transitive but representable: a >= b >= c plus the diagonal."""
    return make_relation("abc", DIAG + [("a", "b"), ("b", "c")])


@pytest.fixture
def strict_cycle():
    return make_relation("abc", DIAG + [("a", "b"), ("b", "c"), ("c", "a")])


@pytest.fixture
def acyclic_not_strong():
    return make_relation("abc", [("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"), ("c", "a")])


@pytest.fixture
def example4():
    return make_relation("abc", DIAG + [("a", "c"), ("b", "c")])


@pytest.fixture
def intransitive_choice():
    return make_relation("abc", DIAG + [("a", "b"), ("b", "c"), ("c", "b")])


@pytest.fixture
def chain():
    """Closed preorder a > b > c."""
    return make_relation("abc", DIAG + [("a", "b"), ("b", "c"), ("a", "c")])


@st.composite
def relations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    cells = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    return Relation(default_labels(n), np.array(cells, dtype=bool).reshape(n, n))


# -- acceptance reporting -------------------------------------------------

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
