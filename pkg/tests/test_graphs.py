import json

import pytest

from raag import Graph, load_graph


def p3():
    return Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])


def test_basic_structure():
    g = p3()
    assert g.n == 3
    assert g.adjacent(0, 1) and g.adjacent(1, 2) and not g.adjacent(0, 2)
    assert g.link(1) == {0, 2}
    assert g.star(0) == {0, 1}
    assert g.dependents[0] == (2,)
    assert g.dependents[1] == ()


def test_center_vertices():
    assert p3().center_vertices() == [1]
    tri = Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    assert tri.center_vertices() == [0, 1, 2]
    assert Graph(["a", "b"], []).center_vertices() == []
    assert Graph(["a"], []).center_vertices() == [0]


def test_complete_discrete():
    assert Graph(["a", "b"], [("a", "b")]).is_complete()
    assert not Graph(["a", "b"], [("a", "b")]).is_discrete()
    assert Graph(["x", "y", "z"], []).is_discrete()
    assert Graph(["x"], []).is_complete() and Graph(["x"], []).is_discrete()


def test_full_subgraph_inherits_order():
    g = Graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
    sub = g.full_subgraph({3, 1, 2})
    assert sub.vertices == ["b", "c", "d"]
    assert sub.edges() == [("b", "c"), ("c", "d")]


def test_validation_errors():
    with pytest.raises(ValueError):
        Graph(["a", "a"], [])
    with pytest.raises(ValueError):
        Graph(["a", "b"], [("a", "z")])
    with pytest.raises(ValueError):
        Graph(["a", "b"], [("a", "a")])
    with pytest.raises(ValueError):
        Graph(["a", ""], [])
    with pytest.raises(ValueError):
        Graph.from_dict({"vertices": ["a"], "edgez": []})
    with pytest.raises(ValueError):
        Graph.from_dict({"edges": []})
    with pytest.raises(ValueError):
        Graph.from_dict([1, 2])


def test_json_roundtrip(tmp_path):
    g = p3()
    d = g.to_dict()
    assert d == {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}
    assert Graph.from_dict(d) == g

    path = tmp_path / "graph.json"
    path.write_text(json.dumps(d))
    assert load_graph(path) == g

    path.write_text("{nope")
    with pytest.raises(ValueError):
        load_graph(path)


def test_equality_and_repr():
    assert p3() == p3()
    assert p3() != Graph(["a", "b", "c"], [("a", "b")])
    assert "Graph" in repr(p3())
