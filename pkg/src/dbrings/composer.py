"""Stacking sub-perfect maps over product alphabets.

Two maps with the same window shape over alphabets of size k1 and k2 are
laid on top of each other; the pair (a, b) becomes the letter ``a*k2 + b``.
With a horizontal ring and a quarter-turned vertical ring whose periods are
made coprime by stair trimming, the product covers almost every pattern.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .errors import ArgumentError, ConstructionError, InfeasibleTrim
from .maps import CyclicMap
from .ring_builder import build_ring, trim_ring
from .ring_graph import DEFAULT_EDGE_BUDGET
from .words import is_prime, necklace_poly


def rotate90(a: CyclicMap) -> CyclicMap:
    """Quarter turn: output cell (r, c) is input cell (c, N-1-r)."""
    return CyclicMap(np.rot90(a.cells), k=a.k, m=a.n, n=a.m)


def compose_product(a1: CyclicMap, a2: CyclicMap) -> CyclicMap:
    if (a1.m, a1.n) != (a2.m, a2.n):
        raise ArgumentError(
            f"window shapes differ: ({a1.m},{a1.n}) vs ({a2.m},{a2.n})"
        )
    M = math.lcm(a1.M, a2.M)
    N = math.lcm(a1.N, a2.N)
    high = np.tile(a1.cells, (M // a1.M, N // a1.N))
    low = np.tile(a2.cells, (M // a2.M, N // a2.N))
    return CyclicMap(high * a2.k + low, k=a1.k * a2.k, m=a1.m, n=a1.n)


@dataclass(frozen=True)
class CompositionSpec:
    """Parameters of a stacked map; primes are spelled out (``m_p`` is m', ``m_pp`` is m'')."""

    m: int
    n: int
    k1: int
    k2: int
    m_p: int
    m_pp: int
    n_p: int
    n_pp: int
    M: int
    N: int
    trimmed: bool = True

    @property
    def k(self) -> int:
        return self.k1 * self.k2

    @property
    def ring1_width(self) -> int:
        """Width of the untrimmed (m, n)_{k1} ring."""
        return necklace_poly(self.k1**self.n, self.m)

    @property
    def ring2_width(self) -> int:
        """Width of the untrimmed (n, m)_{k2} ring."""
        return necklace_poly(self.k2**self.m, self.n)

    @property
    def N1(self) -> int:
        """Horizontal period of layer 1 after trimming."""
        return self.ring1_width - self.n_pp

    @property
    def M2(self) -> int:
        """Vertical period of layer 2 after trimming and rotation."""
        return self.ring2_width - self.m_pp

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CompositionSpec":
        data = json.loads(text)
        spec = cls(**data)
        fresh = plan_composition(spec.m, spec.n, spec.k1, spec.k2, trim=spec.trimmed)
        if fresh != spec:
            raise ArgumentError("sidecar parameters are inconsistent with (m, n, k1, k2)")
        return spec


def _trim_amount(width: int, period: int) -> tuple[int, int]:
    residue = width % period
    return residue, abs(residue - 1) * (residue < period - 1)


def plan_composition(m: int, n: int, k1: int, k2: int, trim: bool = True) -> CompositionSpec:
    for name, value in (("m", m), ("n", n), ("k1", k1), ("k2", k2)):
        if not isinstance(value, int) or value < 2:
            raise ArgumentError(f"{name} must be an integer >= 2, got {value!r}")
    w1 = necklace_poly(k1**n, m)
    w2 = necklace_poly(k2**m, n)
    m_p, m_pp = _trim_amount(w2, m)
    n_p, n_pp = _trim_amount(w1, n)
    if not trim:
        return CompositionSpec(m, n, k1, k2, m_p, 0, n_p, 0, math.lcm(m, w2), math.lcm(n, w1), False)
    # layer 2 is an (n, m) ring: at most n-1 stair columns to remove; likewise m-1 for layer 1
    if m_pp > n - 1:
        raise InfeasibleTrim(f"need to remove m''={m_pp} columns from the ({n},{m}) ring, at most n-1={n - 1}")
    if n_pp > m - 1:
        raise InfeasibleTrim(f"need to remove n''={n_pp} columns from the ({m},{n}) ring, at most m-1={m - 1}")
    if math.gcd(m, w2 - m_pp) != 1 or math.gcd(n, w1 - n_pp) != 1:
        raise ConstructionError("trimmed ring widths are not coprime to the window shape")
    return CompositionSpec(m, n, k1, k2, m_p, m_pp, n_p, n_pp, m * (w2 - m_pp), n * (w1 - n_pp))


@dataclass(frozen=True)
class ProductMap:
    """Composed map with its two layers.

    ``layer1`` is the trimmed (m, n)_{k1} ring of shape (m, N1); ``layer2`` the
    trimmed (n, m)_{k2} ring turned to shape (M2, n).  Cell (r, c) of ``map``
    equals ``layer1[r % m, c % N1] * k2 + layer2[r % M2, c % n]``.
    """

    spec: CompositionSpec
    map: CyclicMap
    layer1: CyclicMap
    layer2: CyclicMap


def build_layers(spec: CompositionSpec, budget: int = DEFAULT_EDGE_BUDGET):
    layer1 = trim_ring(build_ring(spec.m, spec.n, spec.k1, budget), spec.n_pp)
    layer2 = rotate90(trim_ring(build_ring(spec.n, spec.m, spec.k2, budget), spec.m_pp))
    return layer1, layer2


def build_almost_perfect(spec: CompositionSpec, budget: int = DEFAULT_EDGE_BUDGET) -> ProductMap:
    layer1, layer2 = build_layers(spec, budget)
    product = compose_product(layer1, layer2)
    if product.shape != (spec.M, spec.N):
        raise ConstructionError(f"composed shape {product.shape} != planned ({spec.M}, {spec.N})")
    return ProductMap(spec, product, layer1, layer2)


def prime_square_size(k: int, p: int) -> int:
    """Side of the square (p, p)_{k^2} map: ``k^(p^2) - k^p - p``."""
    if k < 2:
        raise ArgumentError(f"k must be >= 2, got {k}")
    if not is_prime(p):
        raise ArgumentError(f"p must be prime, got {p}")
    diff = k ** (p * p) - k**p
    if diff % (p * p):
        raise ConstructionError(f"p^2 does not divide k^(p^2) - k^p for k={k}, p={p}")
    size = diff - p
    if size != p * (necklace_poly(k**p, p) - 1):
        raise ConstructionError("closed form disagrees with p*(M(k^p, p) - 1)")
    return size


def square_map_size(k: int, n: int) -> int:
    """Side N of the square (n, n)_{k^2} map from two (n, n)_k rings."""
    if k < 2 or n < 2:
        raise ArgumentError("square_map_size needs k, n >= 2")
    width = necklace_poly(k**n, n)
    _, n_pp = _trim_amount(width, n)
    return n * (width - n_pp)


def coverage_lower_bound(m: int, n: int, k1: int, k2: int) -> Fraction:
    """Exact lower bound on M*N / k^(mn) for the trimmed construction."""
    f2 = Fraction(k2 ** (m * n) - k2 ** ((m // 2 + 1) * n) - m * m + 3 * m, k2 ** (m * n))
    f1 = Fraction(k1 ** (m * n) - k1 ** ((n // 2 + 1) * m) - n * n + 3 * n, k1 ** (m * n))
    return f1 * f2
