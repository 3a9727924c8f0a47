"""One-dimensional machinery: rotations, Lyndon words, necklace counts and
de Bruijn sequences.

Words are plain tuples of integer symbols ``0..k-1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import ArgumentError, ConstructionError, EnumerationTooLarge

#: Character ramp used for text rendering of symbols.
SYMBOLS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"

ENUMERATION_LIMIT = 10**7

Word = tuple


@dataclass(frozen=True)
class Alphabet:
    """Totally ordered alphabet ``0 < 1 < ... < k-1``."""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ArgumentError(f"alphabet size must be a positive integer, got {self.k!r}")

    def __len__(self):
        return self.k

    def __contains__(self, symbol):
        return isinstance(symbol, int) and 0 <= symbol < self.k

    def render(self, symbol: int) -> str:
        if self.k > len(SYMBOLS):
            raise ArgumentError(f"text rendering supports k <= {len(SYMBOLS)}")
        return SYMBOLS[symbol]

    def parse(self, char: str) -> int:
        value = SYMBOLS.find(char)
        if value < 0 or value >= self.k:
            raise ArgumentError(f"symbol {char!r} not in alphabet of size {self.k}")
        return value

    def check(self, word: Sequence[int]) -> Word:
        word = tuple(word)
        if not all(s in self for s in word):
            raise ArgumentError(f"word {word} has letters outside 0..{self.k - 1}")
        return word


def rotations(w: Sequence[int]):
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(len(w))]


def lexmin_rotation(w: Sequence[int]) -> Word:
    """Lexicographically smallest rotation of ``w``.

    >>> lexmin_rotation((1, 0, 1, 0))
    (0, 1, 0, 1)
    """
    if len(w) == 0:
        raise ArgumentError("word must be nonempty")
    # min() keeps the first minimum, i.e. the smallest offset on ties
    return min(rotations(w))


def is_lyndon(w: Sequence[int]) -> bool:
    w = tuple(w)
    if not w:
        raise ArgumentError("word must be nonempty")
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def is_aperiodic(w: Sequence[int]) -> bool:
    """True iff the ``len(w)`` rotations of ``w`` are pairwise distinct."""
    if len(w) == 0:
        raise ArgumentError("word must be nonempty")
    return len(set(rotations(w))) == len(w)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    if n < 1:
        raise ArgumentError(f"mobius is defined for n >= 1, got {n}")
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def necklace_poly(k: int, m: int) -> int:
    """Number of Lyndon words of length ``m`` over ``k`` letters (exact)."""
    if k < 1 or m < 1:
        raise ArgumentError(f"necklace_poly needs k, m >= 1, got k={k}, m={m}")
    total = sum(mobius(m // d) * k**d for d in divisors(m))
    count, rem = divmod(total, m)
    if rem:
        raise ConstructionError(f"non-integral necklace count for k={k}, m={m}")
    return count


def necklace_poly_float64(k: int, m: int) -> float:
    """``necklace_poly`` evaluated in IEEE double precision.

    Only used to render tables the way they were originally published; the
    exact integer version is authoritative everywhere else.
    """
    total = 0.0
    for d in divisors(m):
        total += mobius(m // d) * float(k) ** d
    return total / m


def count_lyndon_brute(k: int, m: int) -> int:
    if k**m > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(f"refusing to enumerate {k}^{m} words")
    return sum(1 for w in itertools.product(range(k), repeat=m) if is_lyndon(w))


def _euler_circuit(out_edges: list[list[int]], edge_target: list[int], start: int) -> list[int]:
    """Hierholzer's algorithm; returns edge ids of a circuit from ``start``.

    ``out_edges[v]`` must already be in the preferred traversal order.
    """
    cursor = [0] * len(out_edges)
    stack = [(start, -1)]
    circuit: list[int] = []
    while stack:
        v, via = stack[-1]
        if cursor[v] < len(out_edges[v]):
            e = out_edges[v][cursor[v]]
            cursor[v] += 1
            stack.append((edge_target[e], e))
        else:
            stack.pop()
            if via >= 0:
                circuit.append(via)
    circuit.reverse()
    return circuit


def debruijn_sequence(k: int, n: int) -> Word:
    """Cyclic sequence of length ``k**n`` containing every length-``n`` word once.

    Built from an Euler circuit of the (n-1)-dimensional de Bruijn digraph,
    always leaving a vertex along its smallest unused letter.
    """
    if k < 2 or n < 1:
        raise ArgumentError(f"debruijn_sequence needs k >= 2 and n >= 1, got k={k}, n={n}")
    nv = k ** (n - 1)
    # vertex v encodes a word of length n-1 in radix k; edge v*k + a appends letter a
    out_edges = [[v * k + a for a in range(k)] for v in range(nv)]
    edge_target = [e % nv for e in range(nv * k)]
    circuit = _euler_circuit(out_edges, edge_target, 0)
    if len(circuit) != nv * k:
        raise ConstructionError("de Bruijn digraph walk did not use every edge")
    return tuple(e % k for e in circuit)
