import pytest

from isf import (
    CyclicInput,
    Forest,
    InputError,
    OrderedGraph,
    complete_graph,
    component_minima,
    is_increasing,
    orient,
)

F1 = Forest(9, frozenset({(1, 2), (1, 4), (4, 7), (4, 9), (3, 5), (3, 6), (6, 8)}))
F2_EDGES = {(1, 2), (1, 8), (7, 8), (8, 9), (3, 5), (3, 6), (4, 6)}


def test_graph_rejects_bad_edges():
    with pytest.raises(InputError, match=r"\(3,2\)"):
        OrderedGraph(3, frozenset({(3, 2)}))
    with pytest.raises(InputError, match=r"\(1,4\)"):
        OrderedGraph(3, frozenset({(1, 4)}))
    with pytest.raises(InputError):
        OrderedGraph(2, frozenset({(1, 1)}))


def test_forest_rejects_circuit():
    with pytest.raises(CyclicInput):
        Forest(3, frozenset({(1, 2), (1, 3), (2, 3)}))


def test_orient_star():
    o = orient(Forest(3, frozenset({(1, 2), (1, 3)})))
    assert o.roots == frozenset({1})
    assert o.parent == {2: 1, 3: 1}


def test_orient_empty():
    o = orient(Forest(3))
    assert o.roots == frozenset({1, 2, 3})
    assert o.parent == {}


def test_orient_worked_forest():
    o = orient(F1)
    assert o.roots == frozenset({1, 3})
    assert o.parent[7] == 4 and o.parent[9] == 4 and o.parent[8] == 6


def test_is_increasing():
    assert is_increasing(F1)
    assert not is_increasing(Forest(9, frozenset(F2_EDGES)))
    assert is_increasing(Forest(3))


def test_component_minima():
    assert component_minima(F1) == frozenset({1, 3})
    assert component_minima(Forest(4)) == frozenset({1, 2, 3, 4})
    assert component_minima(Forest(3, frozenset({(2, 3)}))) == frozenset({1, 2})


def test_minima_plus_edges_is_n():
    # over all forests of K_4
    from conftest import acyclic_subsets

    for f in acyclic_subsets(complete_graph(4)):
        assert len(component_minima(f)) + len(f.edges) == f.n


def test_edge_removal_preserves_increasing():
    from conftest import acyclic_subsets

    for f in acyclic_subsets(complete_graph(5)):
        if not is_increasing(f):
            continue
        for e in f.edges:
            assert is_increasing(Forest(f.n, f.edges - {e}))


def test_orient_deterministic():
    a, b = orient(F1), orient(F1)
    assert a.parent == b.parent and a.children == b.children


def test_branch():
    o = orient(F1)
    assert o.branch(4) == frozenset({4, 7, 9})
    assert o.branch(3) == frozenset({3, 5, 6, 8})


def test_json_round_trip():
    g = OrderedGraph(4, frozenset({(1, 4), (2, 3)}))
    assert OrderedGraph.from_json(g.to_json()) == g
    assert Forest.from_json(F1.to_json()) == F1


def test_json_rejects_with_diagnostic():
    with pytest.raises(InputError, match=r"\(2,5\)"):
        OrderedGraph.from_json({"n": 4, "edges": [[2, 5]]})
