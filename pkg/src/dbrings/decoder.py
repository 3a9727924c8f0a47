"""Absolute-position decoding for composed maps.

An observed window over ``k1*k2`` letters is split into its two layer
windows, each layer window is looked up to get a position relative to its
layer's period, and the residues are combined with the Chinese remainder
theorem.  Lookup tables are sparse dicts keyed by the radix-k window code.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .composer import ProductMap
from .errors import ArgumentError, ConstructionError, NotInMap
from .maps import CyclicMap
from .patterns2d import Pattern, as_pattern


class Position(NamedTuple):
    row: int
    col: int

    def __str__(self):
        return f"{self.row} {self.col}"


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class CRT:
    """Precomputed solver for x = a (mod p), x = b (mod q) with gcd(p, q) = 1."""

    p: int
    q: int
    p_inv_mod_q: int = field(init=False)

    def __post_init__(self):
        g, x, _ = extended_gcd(self.p, self.q)
        if g != 1:
            raise ArgumentError(f"moduli {self.p} and {self.q} are not coprime")
        object.__setattr__(self, "p_inv_mod_q", x % self.q)

    def __call__(self, a: int, b: int) -> int:
        # x = a + p*t with p*t = b - a (mod q)
        t = ((b - a) * self.p_inv_mod_q) % self.q
        return (a % self.p) + self.p * t


@dataclass
class DecodeCounter:
    """Work performed by ``decode``: cell reads while keying, and table lookups."""

    cell_reads: int = 0
    lookups: int = 0
    calls: int = 0


@dataclass(frozen=True)
class DecoderIndex:
    m: int
    n: int
    k1: int
    k2: int
    M: int
    N: int
    table1: dict  # code -> (row offset < m, column < N1)
    table2: dict  # code -> (row < M2, column offset < n)
    rows_crt: CRT
    cols_crt: CRT


def _index_layer(layer: CyclicMap, m: int, n: int, name: int) -> dict:
    k = layer.k
    table = {}
    cells = layer.cells
    M, N = layer.shape
    for r in range(M):
        for c in range(N):
            code = 0
            for i in range(m):
                row = cells[(r + i) % M]
                for j in range(n):
                    code = code * k + int(row[(c + j) % N])
            if code in table:
                raise ConstructionError(f"layer {name} repeats a window at {(r, c)} and {table[code]}")
            table[code] = (r, c)
    return table


def build_index(pm: ProductMap) -> DecoderIndex:
    spec = pm.spec
    m, n = spec.m, spec.n
    if pm.layer1.M != m or pm.layer2.N != n:
        raise ArgumentError("layers do not have the ring heights expected by the decoder")
    table1 = _index_layer(pm.layer1, m, n, 1)
    table2 = _index_layer(pm.layer2, m, n, 2)
    return DecoderIndex(
        m=m,
        n=n,
        k1=spec.k1,
        k2=spec.k2,
        M=pm.map.M,
        N=pm.map.N,
        table1=table1,
        table2=table2,
        rows_crt=CRT(m, pm.layer2.M),
        cols_crt=CRT(n, pm.layer1.N),
    )


def split_window(window, k1: int, k2: int) -> tuple[Pattern, Pattern]:
    """Split a window over ``k1*k2`` letters into its high (k1) and low (k2) digits."""
    w = as_pattern(window)
    if any(not 0 <= x < k1 * k2 for row in w for x in row):
        raise ArgumentError(f"window cells must lie in 0..{k1 * k2 - 1}")
    high = tuple(tuple(x // k2 for x in row) for row in w)
    low = tuple(tuple(x % k2 for x in row) for row in w)
    return high, low


def _key(p: Pattern, k: int, counter: DecodeCounter | None) -> int:
    code = 0
    for row in p:
        for x in row:
            code = code * k + x
    if counter is not None:
        counter.cell_reads += sum(len(row) for row in p)
    return code


def decode(idx: DecoderIndex, window, counter: DecodeCounter | None = None) -> Position:
    w = as_pattern(window)
    if (len(w), len(w[0])) != (idx.m, idx.n):
        raise ArgumentError(f"window must have shape ({idx.m},{idx.n}), got ({len(w)},{len(w[0])})")
    high, low = split_window(w, idx.k1, idx.k2)
    if counter is not None:
        counter.calls += 1
        counter.lookups += 1
    try:
        r1, c1 = idx.table1[_key(high, idx.k1, counter)]
    except KeyError:
        raise NotInMap(1) from None
    if counter is not None:
        counter.lookups += 1
    try:
        r2, c2 = idx.table2[_key(low, idx.k2, counter)]
    except KeyError:
        raise NotInMap(2) from None
    return Position(idx.rows_crt(r1, r2), idx.cols_crt(c2, c1))


def decode_complexity_probe(idx: DecoderIndex, product: CyclicMap, trials: int = 100) -> dict:
    """Decode ``trials`` evenly spaced windows and report per-decode work.

    Raises if any decode does anything other than two m*n-cell keyings and
    two lookups.
    """
    total = idx.M * idx.N
    step = max(1, total // max(1, trials))
    per_call = []
    for pos in range(0, total, step)[:trials]:
        r, c = divmod(pos, idx.N)
        counter = DecodeCounter()
        got = decode(idx, product.window(r, c, idx.m, idx.n), counter)
        if got != (r, c):
            raise ConstructionError(f"decode({r},{c}) returned {got}")
        per_call.append((counter.cell_reads, counter.lookups))
    expected = (2 * idx.m * idx.n, 2)
    if any(work != expected for work in per_call):
        raise ConstructionError(f"decode work varied: {sorted(set(per_call))}, expected {expected}")
    return {
        "trials": len(per_call),
        "cell_reads_per_decode": expected[0],
        "lookups_per_decode": expected[1],
        "map_shape": (idx.M, idx.N),
        "index_entries": len(idx.table1) + len(idx.table2),
    }
