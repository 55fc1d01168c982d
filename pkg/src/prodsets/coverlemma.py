"""Fresh-neighbour cover sequences in degree-bounded bipartite graphs.

Given a bipartite graph in which every a-vertex has degree <= n and every
b-vertex has degree >= 1, ``cover_sequence`` returns b-vertices b_1, ..., b_k
such that each b_i is adjacent to an a-vertex that no earlier b_j touches,
with k * n >= |B| guaranteed.  A single greedy pass is attempted first; when
it keeps too few vertices, the kept ones are dropped and the procedure
recurses with the degree bound lowered by one (every a-vertex with any edge
was adjacent to a kept b, so it loses an edge).
"""

from __future__ import annotations

from typing import Mapping, Sequence


class Bipartite:
    """Right-adjacency view of a bipartite graph with an a-side degree cap."""

    __slots__ = ("a_vertices", "b_vertices", "adjacency", "degree_bound")

    def __init__(self, a_vertices, b_vertices, adjacency: Mapping,
                 degree_bound: int):
        if degree_bound < 1:
            raise ValueError("degree bound must be >= 1")
        self.a_vertices = tuple(a_vertices)
        self.b_vertices = tuple(b_vertices)
        if len(set(self.a_vertices)) != len(self.a_vertices):
            raise ValueError("duplicate a-vertex")
        if len(set(self.b_vertices)) != len(self.b_vertices):
            raise ValueError("duplicate b-vertex")
        a_set = set(self.a_vertices)
        degree = dict.fromkeys(self.a_vertices, 0)
        adj = {}
        for b in self.b_vertices:
            neighbours = tuple(dict.fromkeys(adjacency.get(b, ())))
            if not neighbours:
                raise ValueError(f"b-vertex {b!r} has degree 0")
            for a in neighbours:
                if a not in a_set:
                    raise ValueError(f"unknown a-vertex {a!r}")
                degree[a] += 1
            adj[b] = neighbours
        for a, d in degree.items():
            if d > degree_bound:
                raise ValueError(
                    f"a-vertex {a!r} has degree {d} > bound {degree_bound}")
        self.adjacency = adj
        self.degree_bound = degree_bound

    def neighbours(self, b):
        return self.adjacency[b]


def cover_sequence(graph: Bipartite) -> list:
    """Ordered b-vertices with fresh neighbourhood prefixes, k * n >= |B|."""
    return _solve(list(graph.b_vertices), graph.adjacency, graph.degree_bound)


def _greedy_pass(b_order, adjacency):
    kept, covered = [], set()
    for b in b_order:
        neighbours = adjacency[b]
        if any(a not in covered for a in neighbours):
            kept.append(b)
            covered.update(neighbours)
    return kept


def _solve(b_order, adjacency, bound):
    kept = _greedy_pass(b_order, adjacency)
    if bound <= 1 or len(kept) * bound >= len(b_order):
        return kept
    removed = set(kept)
    return _solve([b for b in b_order if b not in removed], adjacency, bound - 1)


def verify_cover(graph: Bipartite, sequence: Sequence) -> bool:
    """True iff the sequence is nonempty, repeat-free, and every entry is
    adjacent to an a-vertex untouched by the earlier entries."""
    if not sequence:
        return False
    if len(set(sequence)) != len(sequence):
        return False
    covered: set = set()
    for b in sequence:
        if b not in graph.adjacency:
            return False
        neighbours = graph.adjacency[b]
        if all(a in covered for a in neighbours):
            return False
        covered.update(neighbours)
    return True
