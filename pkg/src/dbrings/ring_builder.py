"""De Bruijn rings from Euler circuits of ring graphs, plus stair-column
trimming used to make ring widths coprime to the window height.
"""
from __future__ import annotations

import numpy as np

from .errors import ArgumentError, ConstructionError
from .maps import CyclicMap
from .ring_graph import DEFAULT_EDGE_BUDGET, build_ring_graph, euler_cycle


def _rot(col: tuple, offset: int) -> tuple:
    offset %= len(col)
    return col[offset:] + col[:offset]


def build_ring(m: int, n: int, k: int, budget: int = DEFAULT_EDGE_BUDGET) -> CyclicMap:
    """An (m, M(k^n, m); m, n)_k sub-perfect map holding every row-aperiodic pattern once."""
    graph = build_ring_graph(m, n, k, budget)
    cycle = euler_cycle(graph)
    width = len(cycle.edges)

    # Rotating the whole ring every step would be quadratic.  Each stored
    # column remembers the accumulated rotation at the time it was appended;
    # its current orientation is stored rotated by (total - stamp).
    stored: list[tuple] = [tuple([0] * m)] * (n - 1)
    stamps: list[int] = [0] * (n - 1)
    total = 0
    for i in range(1, width - (n - 1) + 1):
        stored.append(graph.edges[cycle.edges[i - 1]].label)
        stamps.append(total)
        tail = [_rot(stored[j], total - stamps[j]) for j in range(len(stored) - (n - 1), len(stored))]
        target = graph.vertices[cycle.vertices[i]]
        target_cols = [tuple(row[j] for row in target) for j in range(n - 1)]
        for offset in range(m):
            if all(_rot(col, offset) == want for col, want in zip(tail, target_cols)):
                total += offset
                break
        else:
            raise ConstructionError(f"step {i}: ring suffix is not a rotation of vertex {target}")

    for e in cycle.edges[width - (n - 1):]:
        if any(graph.edges[e].label):
            raise ConstructionError("closing edges of the Euler circuit are not zero columns")

    cols = [_rot(col, total - stamp) for col, stamp in zip(stored, stamps)]
    cells = np.array(cols, dtype=np.int64).T
    return CyclicMap(cells, k=k, m=m, n=n)


def stair_column(i: int, m: int) -> tuple:
    """Column of ``i`` zeros followed by ``m - i`` ones."""
    if not 1 <= i <= m - 1:
        raise ArgumentError(f"stair index must satisfy 1 <= i <= m-1, got i={i}, m={m}")
    return (0,) * i + (1,) * (m - i)


def find_stair_run(ring: CyclicMap, i: int) -> int:
    """Start column of the cyclic run of ``n`` identical rotated stair columns."""
    m, n, width = ring.M, ring.n, ring.N
    stair = stair_column(i, m)
    rotations = {_rot(stair, o) for o in range(m)}
    cols = [tuple(int(x) for x in ring.cells[:, c]) for c in range(width)]
    starts = [
        s
        for s in range(width)
        if cols[s] in rotations and all(cols[(s + j) % width] == cols[s] for j in range(1, n))
    ]
    if len(starts) != 1:
        raise ConstructionError(
            f"expected exactly one run of stair({i}) columns, found {len(starts)} at {starts}"
        )
    return starts[0]


def trim_ring(ring: CyclicMap, j: int) -> CyclicMap:
    """Remove one column from each of the stair runs for i = 1..j."""
    if not 0 <= j <= ring.M - 1:
        raise ArgumentError(f"can trim at most m-1 = {ring.M - 1} columns, asked for {j}")
    for i in range(1, j + 1):
        start = find_stair_run(ring, i)
        ring = CyclicMap(np.delete(ring.cells, start, axis=1), k=ring.k, m=ring.m, n=ring.n)
    return ring
