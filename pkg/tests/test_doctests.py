import doctest

import pytest

from sofic import classify, exact, graphs, oracle, products, syncwords


@pytest.mark.parametrize(
    "module", [graphs, products, syncwords, classify, exact, oracle]
)
def test_doctests(module):
    failures, _ = doctest.testmod(
        module, extraglobs={"LabeledGraph": graphs.LabeledGraph}, verbose=False
    )
    assert failures == 0
