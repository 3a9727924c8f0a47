"""Two-dimensional patterns: vertical rotations, row-Lyndon classification,
integer codes and enumeration.

A pattern is a tuple of rows, each row a tuple of symbols.  Comparing two
such tuples compares rows as single letters of the alphabet ``Sigma^n``,
which is the same as comparing the row-major cell sequences.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .errors import ArgumentError, EnumerationTooLarge
from .words import ENUMERATION_LIMIT, necklace_poly

Pattern = tuple  # tuple[tuple[int, ...], ...]


def as_pattern(rows: Sequence[Sequence[int]], k: int | None = None) -> Pattern:
    """Normalize nested sequences (lists, numpy arrays) into a Pattern."""
    pattern = tuple(tuple(int(x) for x in row) for row in rows)
    if not pattern or not pattern[0]:
        raise ArgumentError("pattern must have at least one row and one column")
    width = len(pattern[0])
    if any(len(row) != width for row in pattern):
        raise ArgumentError("ragged pattern")
    if k is not None and any(not 0 <= x < k for row in pattern for x in row):
        raise ArgumentError(f"pattern cells must lie in 0..{k - 1}")
    return pattern


def shape(p: Pattern) -> tuple[int, int]:
    return len(p), len(p[0])


def rotate_rows(p: Pattern, offset: int) -> Pattern:
    offset %= len(p)
    return p[offset:] + p[:offset]


def row_lexmin(p: Pattern) -> tuple[Pattern, int]:
    """Smallest vertical rotation of ``p`` and the offset producing it.

    ``rotate_rows(p, offset)`` equals the returned pattern; ties go to the
    smallest offset.
    """
    best, best_offset = p, 0
    for offset in range(1, len(p)):
        candidate = p[offset:] + p[:offset]
        if candidate < best:
            best, best_offset = candidate, offset
    return best, best_offset


def is_row_aperiodic(p: Pattern) -> bool:
    return len({p[i:] + p[:i] for i in range(len(p))}) == len(p)


def is_row_lyndon(p: Pattern) -> bool:
    return all(p < p[i:] + p[:i] for i in range(1, len(p)))


def hconcat(*parts: Pattern) -> Pattern:
    """Join patterns of equal height side by side."""
    parts = [q for q in parts if q and q[0]]
    return tuple(sum(rows, ()) for rows in zip(*parts))


def columns(p: Pattern, start: int, stop: int | None = None) -> Pattern:
    return tuple(row[start:stop] for row in p)


def column_pattern(col: Sequence[int]) -> Pattern:
    """An (m, 1) pattern from a column vector given top to bottom."""
    return tuple((int(x),) for x in col)


def encode_pattern(p: Pattern, k: int) -> int:
    """Radix-``k`` integer of the cells in row-major order."""
    code = 0
    for row in p:
        for x in row:
            code = code * k + x
    return code


def decode_pattern(code: int, m: int, n: int, k: int) -> Pattern:
    if not 0 <= code < k ** (m * n):
        raise ArgumentError(f"code {code} out of range for ({m},{n})_{k}")
    cells = []
    for _ in range(m * n):
        code, x = divmod(code, k)
        cells.append(x)
    cells.reverse()
    return tuple(tuple(cells[r * n:(r + 1) * n]) for r in range(m))


def enumerate_patterns(m: int, n: int, k: int) -> Iterator[Pattern]:
    """All ``k**(m*n)`` patterns in lexicographic order."""
    if k ** (m * n) > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(f"refusing to enumerate {k}^{m * n} patterns")
    rows = list(itertools.product(range(k), repeat=n))
    for p in itertools.product(rows, repeat=m):
        yield p


def count_row_aperiodic(m: int, n: int, k: int) -> int:
    if min(m, n, k) < 1:
        raise ArgumentError("m, n, k must be positive")
    return m * necklace_poly(k**n, m)


def count_row_aperiodic_brute(m: int, n: int, k: int) -> int:
    return sum(1 for p in enumerate_patterns(m, n, k) if is_row_aperiodic(p))


class UnreducedFraction(NamedTuple):
    """A ratio kept with its original numerator and denominator."""

    numerator: int
    denominator: int

    @property
    def reduced(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def ap_ratio(m: int, n: int, k: int) -> UnreducedFraction:
    """Share of row-aperiodic patterns, ``m*M(k^n, m) / k^(mn)``."""
    return UnreducedFraction(count_row_aperiodic(m, n, k), k ** (m * n))
