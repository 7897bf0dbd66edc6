import random

import pytest

from sofic.errors import AlphabetMismatchError, NotDeterministicError
from sofic.graphs import LabeledGraph, alphabet, step
from sofic.products import (
    find_word_to,
    hat_graph,
    label_product,
    product_vertex,
    sink_vertex_graph,
    sink_vertex_name,
)

from .oracles import random_deterministic_graph, walk, words_upto


@pytest.fixture
def gm_graph(gm):
    return gm


def test_sink_vertex_graph_full(full1):
    g0 = sink_vertex_graph(full1, {"0", "1"})
    sink = sink_vertex_name(full1)
    added = set(g0.edges) - set(full1.edges)
    assert added == {(sink, "0", sink), (sink, "1", sink)}


def test_sink_vertex_graph_missing_edges(gm, fig1):
    g0 = sink_vertex_graph(gm, {"0", "1"})
    sink = sink_vertex_name(gm)
    assert set(g0.edges) - set(gm.edges) == {
        ("B", "1", sink),
        (sink, "0", sink),
        (sink, "1", sink),
    }
    f0 = sink_vertex_graph(fig1, {"0", "1"})
    sink = sink_vertex_name(fig1)
    assert set(f0.edges) - set(fig1.edges) == {
        ("q3", "1", sink),
        (sink, "0", sink),
        (sink, "1", sink),
    }


def test_sink_vertex_graph_errors(gm):
    with pytest.raises(AlphabetMismatchError):
        sink_vertex_graph(gm, {"0"})
    nondet = LabeledGraph(edges=[("v", "0", "v"), ("v", "0", "w"), ("w", "0", "v")])
    with pytest.raises(NotDeterministicError):
        sink_vertex_graph(nondet, {"0"})


def test_sink_name_avoids_collisions():
    g = LabeledGraph(edges=[("0", "x", "0")])
    assert sink_vertex_name(g) == "00"


def test_sink_graph_tracks_undefined_steps():
    rng = random.Random(31)
    for _ in range(30):
        g = random_deterministic_graph(rng, 4, ["0", "1"])
        gamma = alphabet(g)
        if not gamma:
            continue
        g0 = sink_vertex_graph(g, gamma)
        sink = sink_vertex_name(g)
        for q in g.vertices:
            for w in words_upto(gamma, 4):
                there = step(g0, q, w)
                assert there is not None
                assert (there == sink) == (step(g, q, w) is None)


def test_label_product_examples(full1, gm):
    p = label_product(full1, full1)
    assert p.vertices == (product_vertex("v", "v"),)
    assert len(p.edges) == 2

    p = label_product(gm, gm)
    assert len(p.vertices) == 4
    ab = product_vertex("A", "B")
    out = list(p.out_edges(ab))
    assert out == [("0", product_vertex("A", "A"))]

    assert label_product(gm, LabeledGraph()) == LabeledGraph()


def test_label_product_path_correspondence(gm, ev):
    rng = random.Random(8)
    for _ in range(15):
        g = random_deterministic_graph(rng, 3, ["0", "1"])
        h = random_deterministic_graph(rng, 3, ["0", "1"])
        p = label_product(g, h)
        for w in words_upto(("0", "1"), 4):
            for qg in g.vertices:
                for qh in h.vertices:
                    end_g = walk(g, qg, w)
                    end_h = walk(h, qh, w)
                    end_p = walk(p, product_vertex(qg, qh), w)
                    if end_g is None or end_h is None:
                        assert end_p is None
                    else:
                        assert end_p == product_vertex(end_g, end_h)


def test_hat_graph(gm, ev, full1):
    h = hat_graph(gm)
    assert set(h.vertices) == {product_vertex("A", "B"), product_vertex("B", "A")}
    assert h.edges == ()

    h = hat_graph(ev)
    assert set(h.vertices) == {product_vertex("A", "B"), product_vertex("B", "A")}
    assert set(h.edges) == {
        (product_vertex("A", "B"), "0", product_vertex("B", "A")),
        (product_vertex("B", "A"), "0", product_vertex("A", "B")),
    }

    assert hat_graph(full1) == LabeledGraph()


def test_hat_graph_size():
    rng = random.Random(9)
    for _ in range(20):
        g = random_deterministic_graph(rng, 5, ["0", "1"])
        n = len(g.vertices)
        assert len(hat_graph(g).vertices) == n * n - n


def test_find_word_to(gm):
    assert find_word_to(gm, {"A"}, lambda v: v == "B") == ("1",)
    assert find_word_to(gm, {"A", "B"}, lambda v: v == "A") == ()
    loops = LabeledGraph(edges=[("a", "x", "a"), ("b", "x", "b")])
    assert find_word_to(loops, {"a"}, lambda v: v == "b") is None


def test_find_word_to_returns_shortest():
    rng = random.Random(10)
    for _ in range(30):
        g = random_deterministic_graph(rng, 5, ["0", "1"])
        if not g.vertices:
            continue
        source = g.vertices[0]
        target = g.vertices[-1]
        got = find_word_to(g, {source}, lambda v: v == target)
        lengths = [
            len(w)
            for w in words_upto(("0", "1"), 5)
            if walk(g, source, w) == target
        ]
        if got is None:
            assert not lengths
        else:
            assert walk(g, source, got) == target
            if lengths:
                assert len(got) == min(lengths)
