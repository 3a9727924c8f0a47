"""Toroidal symbol arrays and the DBMAP text interchange format.

DBMAP layout::

    DBMAP M=<M> N=<N> m=<m> n=<n> k=<k>
    <M lines of N symbol characters>

Symbols use the ``0-9A-Za-z`` ramp, so k is limited to 62 for text I/O.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ArgumentError
from .patterns2d import Pattern
from .words import SYMBOLS

_HEADER = re.compile(r"^DBMAP M=(\d+) N=(\d+) m=(\d+) n=(\d+) k=(\d+)$")


@dataclass(frozen=True, eq=False)
class CyclicMap:
    """An (M, N) array read with wrap-around in both directions.

    ``m`` and ``n`` record the window shape the map is claimed to be
    (sub-)perfect for.
    """

    cells: np.ndarray
    k: int
    m: int
    n: int

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64, copy=True)
        if cells.ndim != 2 or cells.size == 0:
            raise ArgumentError("map cells must be a nonempty 2-D array")
        if self.k < 1 or self.m < 1 or self.n < 1:
            raise ArgumentError("k, m, n must be positive")
        if cells.min() < 0 or cells.max() >= self.k:
            raise ArgumentError(f"map cells must lie in 0..{self.k - 1}")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "_rows", cells.tolist())

    @property
    def M(self) -> int:
        return self.cells.shape[0]

    @property
    def N(self) -> int:
        return self.cells.shape[1]

    @property
    def shape(self):
        return self.cells.shape

    def __getitem__(self, rc):
        r, c = rc
        return self._rows[r % self.M][c % self.N]

    def window(self, r: int, c: int, m: int | None = None, n: int | None = None) -> Pattern:
        """The (m, n) pattern whose top-left cell is at (r, c)."""
        m = self.m if m is None else m
        n = self.n if n is None else n
        M, N, rows = self.M, self.N, self._rows
        cols = [(c + j) % N for j in range(n)]
        return tuple(tuple(rows[(r + i) % M][j] for j in cols) for i in range(m))

    def __eq__(self, other):
        if not isinstance(other, CyclicMap):
            return NotImplemented
        return (self.k, self.m, self.n) == (other.k, other.m, other.n) and np.array_equal(
            self.cells, other.cells
        )

    def __hash__(self):
        return hash((self.k, self.m, self.n, self.cells.tobytes(), self.cells.shape))

    def __repr__(self):
        return f"CyclicMap(M={self.M}, N={self.N}, m={self.m}, n={self.n}, k={self.k})"

    def to_dbmap(self) -> str:
        if self.k > len(SYMBOLS):
            raise ArgumentError(f"DBMAP text supports k <= {len(SYMBOLS)}")
        ramp = np.array(list(SYMBOLS))
        body = "".join("".join(row) + "\n" for row in ramp[self.cells])
        return f"DBMAP M={self.M} N={self.N} m={self.m} n={self.n} k={self.k}\n" + body

    @classmethod
    def from_dbmap(cls, text: str) -> "CyclicMap":
        lines = text.split("\n")
        match = _HEADER.match(lines[0].strip())
        if not match:
            raise ArgumentError(f"not a DBMAP header: {lines[0]!r}")
        M, N, m, n, k = (int(g) for g in match.groups())
        rows = [line.rstrip("\r") for line in lines[1:] if line.strip()]
        if len(rows) != M or any(len(row) != N for row in rows):
            raise ArgumentError(f"DBMAP body does not match declared shape {M}x{N}")
        lookup = {ch: i for i, ch in enumerate(SYMBOLS[:k])}
        try:
            cells = [[lookup[ch] for ch in row] for row in rows]
        except KeyError as exc:
            raise ArgumentError(f"symbol {exc.args[0]!r} outside alphabet of size {k}") from None
        return cls(np.array(cells, dtype=np.int64), k=k, m=m, n=n)


def read_map(path) -> CyclicMap:
    return CyclicMap.from_dbmap(Path(path).read_text())


def write_map(cmap: CyclicMap, path) -> None:
    Path(path).write_text(cmap.to_dbmap())
