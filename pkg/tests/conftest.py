import pytest

from sofic.graphs import LabeledGraph, induced_subgraph


@pytest.fixture
def full1():
    return LabeledGraph(edges=[("v", "0", "v"), ("v", "1", "v")])


@pytest.fixture
def fig1():
    # reducible, follower-separated, deterministic; its shift equals hfig1's
    return LabeledGraph(
        edges=[
            ("q1", "0", "q1"),
            ("q1", "1", "q2"),
            ("q2", "1", "q2"),
            ("q2", "0", "q3"),
            ("q3", "0", "q2"),
        ]
    )


@pytest.fixture
def hfig1(fig1):
    return induced_subgraph(fig1, {"q2", "q3"})


@pytest.fixture
def gm():
    # golden mean: no two consecutive 1s
    return LabeledGraph(edges=[("A", "0", "A"), ("A", "1", "B"), ("B", "0", "A")])


@pytest.fixture
def ev():
    # even shift: maximal 0-blocks between 1s have even length
    return LabeledGraph(edges=[("A", "1", "A"), ("A", "0", "B"), ("B", "0", "A")])


@pytest.fixture
def p2():
    # two-cycle with one letter: no synchronizing word
    return LabeledGraph(edges=[("A", "a", "B"), ("B", "a", "A")])


@pytest.fixture
def dup_gm():
    # golden mean with the 0-loop split across two equivalent vertices
    return LabeledGraph(
        edges=[
            ("A", "0", "Ap"),
            ("Ap", "0", "A"),
            ("A", "1", "B"),
            ("Ap", "1", "B"),
            ("B", "0", "A"),
        ]
    )
