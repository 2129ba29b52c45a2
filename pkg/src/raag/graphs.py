"""Finite simplicial graphs with a fixed vertex order.

Vertices are named by nonempty strings. The order in which they are listed
is significant: it fixes the letter order used for canonical words, pivot
choices, and every other tie-break in the package. All computational code
refers to a vertex by its index in that order; names only matter at the
parsing and printing boundary.
"""

from __future__ import annotations

import json

__all__ = ["Graph", "load_graph"]


class Graph:
    """A finite simplicial graph.

    >>> g = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    >>> g.adjacent(0, 1), g.adjacent(0, 2)
    (True, False)
    >>> sorted(g.link(1))
    [0, 2]
    """

    def __init__(self, vertices, edges=()):
        self.vertices = list(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex name")
        for name in self.vertices:
            if not isinstance(name, str) or not name:
                raise ValueError("vertex names must be nonempty strings")
        self.index = {name: i for i, name in enumerate(self.vertices)}
        adj = [set() for _ in self.vertices]
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise ValueError(f"edge {e!r} is not a pair")
            if u not in self.index or v not in self.index:
                raise ValueError(f"edge {list(e)!r} uses an unknown vertex")
            if u == v:
                raise ValueError(f"loop at {u!r} not allowed")
            adj[self.index[u]].add(self.index[v])
            adj[self.index[v]].add(self.index[u])
        self.adj = [frozenset(s) for s in adj]
        # per vertex, the vertices it does not commute with (the non-neighbours)
        self.dependents = [
            tuple(j for j in range(self.n) if j != i and j not in self.adj[i])
            for i in range(self.n)
        ]

    @property
    def n(self):
        return len(self.vertices)

    def adjacent(self, i, j):
        return j in self.adj[i]

    def link(self, i):
        return self.adj[i]

    def star(self, i):
        return self.adj[i] | {i}

    def edges(self):
        return [
            (self.vertices[i], self.vertices[j])
            for i in range(self.n)
            for j in sorted(self.adj[i])
            if i < j
        ]

    def center_vertices(self):
        """Indices of vertices adjacent to every other vertex."""
        return [i for i in range(self.n) if len(self.adj[i]) == self.n - 1]

    def is_complete(self):
        return all(len(self.adj[i]) == self.n - 1 for i in range(self.n))

    def is_discrete(self):
        return all(not self.adj[i] for i in range(self.n))

    def full_subgraph(self, keep):
        """Induced subgraph on the vertex indices `keep`, order inherited."""
        keep = sorted(set(keep))
        names = [self.vertices[i] for i in keep]
        edges = [
            (self.vertices[i], self.vertices[j])
            for i in keep
            for j in keep
            if i < j and j in self.adj[i]
        ]
        return Graph(names, edges)

    def to_dict(self):
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ValueError("graph description must be a JSON object")
        unknown = set(data) - {"vertices", "edges"}
        if unknown:
            raise ValueError(f"unknown keys in graph description: {sorted(unknown)}")
        if "vertices" not in data or not isinstance(data["vertices"], list):
            raise ValueError('graph description needs a "vertices" list')
        edges = data.get("edges", [])
        if not isinstance(edges, list):
            raise ValueError('"edges" must be a list of pairs')
        return cls(data["vertices"], edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((tuple(self.vertices), tuple(self.adj)))

    def __repr__(self):
        return f"Graph({self.vertices!r}, {self.edges()!r})"


def load_graph(path):
    """Read a graph from a JSON file of the form
    {"vertices": ["a", "b"], "edges": [["a", "b"]]}."""
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})")
    return Graph.from_dict(data)
