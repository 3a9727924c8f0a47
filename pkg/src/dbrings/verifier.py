"""Exhaustive cyclic-window verification of (sub-)perfect maps."""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ArgumentError, ResourceBudgetError
from .maps import CyclicMap
from .patterns2d import Pattern, decode_pattern
from .words import necklace_poly

DEFAULT_WINDOW_BUDGET = 10**8
MAX_WITNESSES = 100
_INT64_SAFE = 2**63


@dataclass
class VerificationReport:
    M: int
    N: int
    m: int
    n: int
    k: int
    distinct_windows: int
    duplicate_witnesses: list = field(default_factory=list)
    coverage_ratio: Fraction = Fraction(0)
    is_sub_perfect: bool = False
    is_perfect: bool = False
    is_de_bruijn_ring: bool = False

    def to_dict(self) -> dict:
        return {
            "M": self.M,
            "N": self.N,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "distinct_windows": self.distinct_windows,
            "duplicate_witnesses": [
                {"pattern": [list(row) for row in p], "first": list(a), "second": list(b)}
                for p, a, b in self.duplicate_witnesses
            ],
            "coverage_ratio": f"{self.coverage_ratio.numerator}/{self.coverage_ratio.denominator}",
            "is_sub_perfect": self.is_sub_perfect,
            "is_perfect": self.is_perfect,
            "is_de_bruijn_ring": self.is_de_bruijn_ring,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        kind = (
            "de Bruijn ring" if self.is_de_bruijn_ring
            else "perfect map" if self.is_perfect
            else "sub-perfect map" if self.is_sub_perfect
            else "NOT sub-perfect"
        )
        lines = [
            f"type        ({self.M},{self.N}; {self.m},{self.n})_{self.k}",
            f"verdict     {kind}",
            f"windows     {self.M * self.N} scanned, {self.distinct_windows} distinct",
            f"coverage    {self.coverage_ratio.numerator}/{self.coverage_ratio.denominator}"
            f" of {self.k}^{self.m * self.n} patterns",
        ]
        for p, a, b in self.duplicate_witnesses:
            cells = "/".join("".join(str(x) for x in row) for row in p)
            lines.append(f"duplicate   {cells} at {a} and {b}")
        return "\n".join(lines) + "\n"


def _codes_int(cells: np.ndarray, m: int, n: int, k: int, col_range=None) -> np.ndarray:
    """Radix-k row-major window codes for windows starting in ``col_range``."""
    M, N = cells.shape
    cols = np.arange(N) if col_range is None else np.arange(*col_range)
    codes = np.zeros((M, len(cols)), dtype=np.int64)
    for i in range(m):
        rows = (np.arange(M) + i) % M
        for j in range(n):
            codes = codes * k + cells[np.ix_(rows, (cols + j) % N)]
    return codes


def _codes_bytes(cells: np.ndarray, m: int, n: int, col_range=None) -> np.ndarray:
    """Window cells stacked as an (M*len(cols), m*n) array, for keys beyond int64."""
    M, N = cells.shape
    cols = np.arange(N) if col_range is None else np.arange(*col_range)
    planes = []
    for i in range(m):
        rows = (np.arange(M) + i) % M
        for j in range(n):
            planes.append(cells[np.ix_(rows, (cols + j) % N)])
    return np.stack(planes, axis=-1).astype(np.uint8 if cells.max() < 256 else np.int64)


def window_codes(cmap: CyclicMap, m: int, n: int, workers: int = 1):
    """Per-position window keys, shape (M, N) ints or (M, N, m*n) cell stacks."""
    cells = cmap.cells
    N = cmap.N
    use_int = cmap.k ** (m * n) <= _INT64_SAFE
    if workers <= 1 or N < 2 * workers:
        return _codes_int(cells, m, n, cmap.k) if use_int else _codes_bytes(cells, m, n)
    bounds = np.linspace(0, N, workers + 1, dtype=int)
    ranges = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        if use_int:
            parts = list(pool.map(lambda r: _codes_int(cells, m, n, cmap.k, r), ranges))
        else:
            parts = list(pool.map(lambda r: _codes_bytes(cells, m, n, r), ranges))
    return np.concatenate(parts, axis=1)


def _check_budget(cmap: CyclicMap, budget: int):
    if cmap.M * cmap.N > budget:
        raise ResourceBudgetError(f"{cmap.M}x{cmap.N} windows exceed the scan budget {budget}")


def verify(
    cmap: CyclicMap,
    m: int | None = None,
    n: int | None = None,
    budget: int = DEFAULT_WINDOW_BUDGET,
    workers: int = 1,
) -> VerificationReport:
    m = cmap.m if m is None else m
    n = cmap.n if n is None else n
    if m < 1 or n < 1:
        raise ArgumentError("window shape must be positive")
    _check_budget(cmap, budget)
    M, N, k = cmap.M, cmap.N, cmap.k
    codes = window_codes(cmap, m, n, workers)
    if codes.ndim == 2:
        flat = codes.reshape(-1)
        _, first, inverse, counts = np.unique(flat, return_index=True, return_inverse=True, return_counts=True)
    else:
        flat = codes.reshape(M * N, m * n)
        _, first, inverse, counts = np.unique(
            flat, axis=0, return_index=True, return_inverse=True, return_counts=True
        )
    inverse = np.asarray(inverse).reshape(-1)
    distinct = len(counts)

    witnesses = []
    if distinct < M * N:
        repeated = np.nonzero(counts[inverse] > 1)[0]
        for pos in repeated:
            first_pos = int(first[inverse[pos]])
            if first_pos == pos:
                continue
            pattern = cmap.window(first_pos // N, first_pos % N, m, n)
            witnesses.append((pattern, divmod(first_pos, N), divmod(int(pos), N)))
            if len(witnesses) >= MAX_WITNESSES:
                break

    sub_perfect = distinct == M * N
    total = k ** (m * n)
    return VerificationReport(
        M=M,
        N=N,
        m=m,
        n=n,
        k=k,
        distinct_windows=distinct,
        duplicate_witnesses=witnesses,
        coverage_ratio=Fraction(distinct, total),
        is_sub_perfect=sub_perfect,
        is_perfect=sub_perfect and M * N == total,
        is_de_bruijn_ring=sub_perfect and M == m and N == necklace_poly(k**n, m),
    )


def coverage(cmap: CyclicMap, m: int | None = None, n: int | None = None, **kwargs) -> Fraction:
    return verify(cmap, m, n, **kwargs).coverage_ratio


def window_set(cmap: CyclicMap, m: int | None = None, n: int | None = None, budget: int = DEFAULT_WINDOW_BUDGET) -> set:
    """Set of integer codes of all windows (only for k^(mn) within int64)."""
    m = cmap.m if m is None else m
    n = cmap.n if n is None else n
    _check_budget(cmap, budget)
    if cmap.k ** (m * n) > _INT64_SAFE:
        raise ArgumentError("window_set needs k^(mn) <= 2^63")
    return set(int(x) for x in _codes_int(cmap.cells, m, n, cmap.k).reshape(-1))


def windows_as_patterns(cmap: CyclicMap, m: int, n: int) -> set[Pattern]:
    return {decode_pattern(code, m, n, cmap.k) for code in window_set(cmap, m, n)}
