"""Ring graphs: multidigraphs on vertically-rotation-classes of (m, n-1)
patterns whose Euler circuits spell out de Bruijn rings.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import ArgumentError, ConstructionError, ResourceBudgetError
from .patterns2d import Pattern, column_pattern, columns, hconcat, is_row_aperiodic, row_lexmin
from .words import SYMBOLS, _euler_circuit, necklace_poly

DEFAULT_EDGE_BUDGET = 10**8


class Edge(NamedTuple):
    src: int
    dst: int
    label: tuple  # column, top to bottom


@dataclass(frozen=True)
class RingGraph:
    m: int
    n: int
    k: int
    vertices: list
    edges: list
    out_edges: list = field(repr=False)
    index: dict = field(repr=False)

    def zero_vertex(self) -> int:
        return self.index[tuple((0,) * (self.n - 1) for _ in range(self.m))]

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for e in self.edges:
            deg[e.dst] += 1
        return deg

    def out_degrees(self) -> list[int]:
        return [len(out) for out in self.out_edges]

    def is_weakly_connected(self) -> bool:
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            parent[find(e.src)] = find(e.dst)
        return len({find(v) for v in range(len(self.vertices))}) == 1

    def edge_pattern(self, e: Edge) -> Pattern:
        """The (m, n) pattern ``[source | label]`` an edge stands for."""
        return hconcat(self.vertices[e.src], column_pattern(e.label))

    def dump(self) -> str:
        """Edge list text: ``src -> dst label`` with cells row-major, rows split by '/'."""

        def fmt(p):
            return "/".join("".join(SYMBOLS[x] for x in row) for row in p)

        lines = []
        for e in self.edges:
            label = "".join(SYMBOLS[x] for x in e.label)
            lines.append(f"{fmt(self.vertices[e.src])} -> {fmt(self.vertices[e.dst])} {label}")
        return "\n".join(lines) + "\n"


class EulerCycle(NamedTuple):
    start: int
    edges: list  # edge indices in traversal order
    vertices: list  # V_0, V_1, ..., V_T == V_0


def _check_params(m, n, k):
    for name, value in (("m", m), ("n", n), ("k", k)):
        if not isinstance(value, int) or value < 2:
            raise ArgumentError(f"{name} must be an integer >= 2, got {value!r}")


def build_ring_graph(m: int, n: int, k: int, budget: int = DEFAULT_EDGE_BUDGET) -> RingGraph:
    _check_params(m, n, k)
    n_edges = necklace_poly(k**n, m)
    if n_edges > budget:
        raise ResourceBudgetError(f"ring graph ({m},{n})_{k} has {n_edges} edges, budget {budget}")

    row_words = list(itertools.product(range(k), repeat=n - 1))
    vertices = []
    for p in itertools.product(row_words, repeat=m):
        if row_lexmin(p)[0] == p:
            vertices.append(p)
    vertices.sort(key=lambda p: sum(p, ()))
    index = {p: i for i, p in enumerate(vertices)}

    all_columns = list(itertools.product(range(k), repeat=m))
    edges: list[Edge] = []
    out_edges: list[list[int]] = [[] for _ in vertices]
    for src, p1 in enumerate(vertices):
        claimed = set()
        # ascending column order: the first label reaching a rotation class is its minimal one
        for label in all_columns:
            q = hconcat(p1, column_pattern(label))
            if not is_row_aperiodic(q):
                continue
            cls = row_lexmin(q)[0]
            if cls in claimed:
                continue
            claimed.add(cls)
            dst = index[row_lexmin(columns(q, 1))[0]]
            out_edges[src].append(len(edges))
            edges.append(Edge(src, dst, label))

    if len(edges) != n_edges:
        raise ConstructionError(f"ring graph has {len(edges)} edges, expected {n_edges}")
    return RingGraph(m, n, k, vertices, edges, out_edges, index)


def euler_cycle(graph: RingGraph) -> EulerCycle:
    """Hierholzer walk from the all-zero vertex, smallest label first."""
    if graph.in_degrees() != graph.out_degrees():
        raise ConstructionError("ring graph is not balanced")
    start = graph.zero_vertex()
    targets = [e.dst for e in graph.edges]
    circuit = _euler_circuit(graph.out_edges, targets, start)
    if len(circuit) != len(graph.edges):
        raise ConstructionError("ring graph is not connected; Euler walk incomplete")
    vertices = [start]
    for e in circuit:
        if graph.edges[e].src != vertices[-1]:
            raise ConstructionError("Euler walk broke adjacency")
        vertices.append(graph.edges[e].dst)
    if vertices[-1] != start:
        raise ConstructionError("Euler walk did not close")
    return EulerCycle(start, circuit, vertices)
