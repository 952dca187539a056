import pytest

from gislat.graph import parse_graph

GAMMA1_TEXT = """\
vertex v1
vertex u1
vertex w1
edge e1 v1 u1
edge f1 v1 w1
"""

GAMMA2_TEXT = """\
vertex v2
vertex u2
vertex w2
edge e2 v2 u2
edge f2 v2 w2
edge g2 v2 w2
"""

LOOP_TEXT = """\
vertex v
edge e v v
"""


@pytest.fixture(scope="session")
def gamma1():
    return parse_graph(GAMMA1_TEXT)


@pytest.fixture(scope="session")
def gamma2():
    return parse_graph(GAMMA2_TEXT)


@pytest.fixture(scope="session")
def loop_graph():
    return parse_graph(LOOP_TEXT)
