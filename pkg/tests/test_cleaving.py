import os

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from noloopwb.cleaving import (
    build_functor,
    classify_graph,
    diagram_from_arrows,
    representation_infinite_witness,
    underlying_graph_type,
    verify_cleaving,
)
from noloopwb.cli import parse_diagram_file
from noloopwb.config import WorkbenchConfig
from noloopwb.exceptions import IllFormedFunctor, MalformedPresentation
from noloopwb.raycat import build_ray_category


def diagram_file(name):
    with open(os.path.join(WorkbenchConfig.CORPUS_DIR, name), encoding="utf-8") as f:
        return parse_diagram_file(f.read())


def graph(edges, nodes=()):
    g = nx.MultiGraph()
    g.add_nodes_from(nodes)
    g.add_edges_from(edges)
    return g


def star(arms):
    edges = []
    for k, length in enumerate(arms):
        previous = "c"
        for i in range(length):
            node = f"{k}-{i}"
            edges.append((previous, node))
            previous = node
    return graph(edges)


@pytest.mark.parametrize(
    "g,expected",
    [
        (graph([(0, 1), (1, 2), (2, 3), (3, 0)]), ("euclidean", "A", 3)),
        (graph([(0, 1), (0, 1)]), ("euclidean", "A", 1)),
        (graph([(0, 1), (1, 2)]), ("dynkin", "A", 3)),
        (star([1, 1, 3]), ("dynkin", "D", 6)),
        (star([1, 1, 1, 1]), ("euclidean", "D", 4)),
        (graph([(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]), ("euclidean", "D", 5)),
        (graph([(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]), ("euclidean", "D", 6)),
        (star([1, 2, 2]), ("dynkin", "E", 6)),
        (star([2, 2, 2]), ("euclidean", "E", 6)),
        (star([1, 3, 3]), ("euclidean", "E", 7)),
        (star([1, 2, 5]), ("euclidean", "E", 8)),
    ],
)
def test_graph_types(g, expected):
    gt = classify_graph(g)
    assert (gt.family, gt.letter, gt.rank) == expected


def test_unrecognised_graphs():
    assert classify_graph(graph([(0, 1)], nodes=[2])).label == "other"
    assert classify_graph(graph([(0, 0)])).label == "other"
    assert classify_graph(star([2, 2, 3])).label == "other"


@given(st.integers(min_value=1, max_value=12))
def test_paths_are_type_a(n):
    g = graph([(i, i + 1) for i in range(n - 1)], nodes=range(n))
    assert classify_graph(g).label == f"A{n}"


@given(st.integers(min_value=2, max_value=12))
def test_cycles_are_extended_type_a(n):
    g = graph([(i, (i + 1) % n) for i in range(n)])
    gt = classify_graph(g)
    assert gt.is_euclidean
    assert gt.rank == n - 1


def test_diagram_rejects_oriented_cycles():
    with pytest.raises(MalformedPresentation):
        diagram_from_arrows("cycle", ["a", "b"], [("f", "a", "b"), ("g", "b", "a")])


def test_diagram_morphisms_respect_relations():
    d = diagram_from_arrows(
        "square",
        ["a", "b", "c", "d"],
        [("f", "a", "b"), ("g", "b", "d"), ("h", "a", "c"), ("k", "c", "d")],
        equalities=[("f.g", "h.k")],
    )
    assert d.morphism("h.k") == d.morphism("f.g")
    assert len(d.morphisms_from("a")) == 4
    assert [m.label for m in d.irreducible_morphisms()] == ["f", "g", "h", "k"]


def test_functor_needs_images_for_every_arrow(loopnil3):
    rc = build_ray_category(loopnil3)
    d = diagram_from_arrows("one", ["a", "b"], [("f", "a", "b")])
    with pytest.raises(IllFormedFunctor):
        build_functor(d, rc, {})


def test_l34_square_is_a_euclidean_cleaving_diagram(l34):
    rc = build_ray_category(l34)
    parsed = diagram_file("l34.dgm")
    functor = build_functor(parsed.diagram, rc, parsed.images)
    assert underlying_graph_type(parsed.diagram).label == "A\u03033"
    assert verify_cleaving(rc, parsed.diagram, functor).ok
    witness = representation_infinite_witness(rc, parsed.diagram, functor)
    assert witness.emitted


def test_square_on_example1_is_not_cleaving(example1):
    rc = build_ray_category(example1)
    parsed = diagram_file("example1.dgm")
    functor = build_functor(parsed.diagram, rc, parsed.images)
    report = verify_cleaving(rc, parsed.diagram, functor)
    assert not report.ok
    assert report.condition == "b"
    assert not representation_infinite_witness(rc, parsed.diagram, functor).emitted


@given(st.integers(min_value=1, max_value=10))
def test_type_d_trees_are_dynkin(k):
    gt = classify_graph(star([1, 1, k]))
    assert not gt.is_euclidean
    assert (gt.letter, gt.rank) == ("D", k + 3)
