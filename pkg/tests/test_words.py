import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dbrings.errors import ArgumentError, EnumerationTooLarge
from dbrings.words import (
    Alphabet,
    count_lyndon_brute,
    debruijn_sequence,
    divisors,
    is_aperiodic,
    is_lyndon,
    is_prime,
    lexmin_rotation,
    mobius,
    necklace_poly,
    necklace_poly_float64,
)
from oracles import all_rotations, brute_lyndon_count, brute_mobius

words = st.integers(1, 4).flatmap(lambda k: st.lists(st.integers(0, k - 1), min_size=1, max_size=9))


@pytest.mark.parametrize(
    "w, expected",
    [((1, 1, 0), (0, 1, 1)), ((0, 0), (0, 0)), ((1, 0, 1, 0), (0, 1, 0, 1))],
)
def test_lexmin_rotation(w, expected):
    assert lexmin_rotation(w) == expected


@pytest.mark.parametrize("w, expected", [((0, 0, 1, 1), True), ((0, 1, 0, 1), False), ((0,), True)])
def test_is_lyndon(w, expected):
    assert is_lyndon(w) is expected


@pytest.mark.parametrize("w, expected", [((1, 1, 0), True), ((1, 0, 1, 0), False), ((0, 0, 0), False)])
def test_is_aperiodic(w, expected):
    assert is_aperiodic(w) is expected


def test_empty_word_rejected():
    with pytest.raises(ArgumentError):
        lexmin_rotation(())


@given(words)
def test_aperiodicity_equivalences(w):
    distinct = len(set(all_rotations(w))) == len(w)
    assert is_aperiodic(w) == distinct == is_lyndon(lexmin_rotation(w))


@given(words)
def test_lexmin_is_a_minimal_rotation(w):
    lm = lexmin_rotation(w)
    assert lm in all_rotations(w)
    assert lm == min(all_rotations(w))
    assert sorted(lm) == sorted(w)


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 1), (12, 0), (30, -1), (7, -1)])
def test_mobius_examples(n, expected):
    assert mobius(n) == expected


def test_mobius_against_oracle():
    assert all(mobius(n) == brute_mobius(n) for n in range(1, 500))


def test_divisors_and_primes():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("k, m, expected", [(2, 3, 2), (4, 2, 6), (32, 5, 6710880)])
def test_necklace_poly_examples(k, m, expected):
    assert necklace_poly(k, m) == expected


def test_necklace_poly_exceeds_64_bits():
    # 5^36 territory: Table 2 needs values well past 2**64
    value = necklace_poly(5**6, 6)
    assert value > 2**64
    assert isinstance(value, int)


@pytest.mark.parametrize("k, m, expected", [(2, 3, 2), (2, 1, 2), (3, 2, 3)])
def test_count_lyndon_brute_examples(k, m, expected):
    assert count_lyndon_brute(k, m) == expected


def test_count_lyndon_brute_guard():
    with pytest.raises(EnumerationTooLarge):
        count_lyndon_brute(10, 8)


@pytest.mark.parametrize("k, m", [(k, m) for k in range(2, 5) for m in range(1, 8) if k**m <= 5000])
def test_necklace_poly_matches_independent_enumeration(k, m):
    assert necklace_poly(k, m) == brute_lyndon_count(k, m)


@pytest.mark.parametrize("k, m", list(itertools.product(range(2, 9), range(2, 9))))
def test_necklace_bounds(k, m):
    lower = k**m - k ** (m // 2 + 1)
    upper = k**m
    value = m * necklace_poly(k, m)
    assert lower < value < upper


# the full 2 <= k <= 4, 2 <= m <= 10 grid (up to 4^10 words) runs in test_acceptance
@pytest.mark.parametrize("k, m", [(k, m) for k in range(2, 5) for m in range(2, 11) if k**m <= 300_000])
def test_periodic_share_bound_by_enumeration(k, m):
    periodic = sum(1 for w in itertools.product(range(k), repeat=m) if len(set(all_rotations(w))) < m)
    assert periodic == k**m - m * necklace_poly(k, m)
    # periodic/k^m <= k^(1 - ceil(m/2))  <=>  periodic * k^(ceil(m/2) - 1) <= k^m
    assert periodic * k ** ((m + 1) // 2 - 1) <= k**m


def test_float64_necklace_is_close_but_not_authoritative():
    assert necklace_poly_float64(2, 3) == 2.0
    assert int(6 * necklace_poly_float64(5**5, 6)) == 931322574584951078912
    assert 6 * necklace_poly(5**5, 6) == 931322574584951175000


def _windows(seq, n):
    L = len(seq)
    return {tuple(seq[(i + j) % L] for j in range(n)) for i in range(L)}


@pytest.mark.parametrize("k, n", [(2, 1), (2, 3), (3, 2), (2, 5), (4, 3), (5, 2)])
def test_debruijn_sequence_windows(k, n):
    seq = debruijn_sequence(k, n)
    assert len(seq) == k**n
    assert len(_windows(seq, n)) == k**n


def test_debruijn_small_cases():
    assert debruijn_sequence(2, 1) == (0, 1)
    assert debruijn_sequence(2, 3) == debruijn_sequence(2, 3)  # deterministic


@pytest.mark.parametrize("k, n", [(1, 2), (2, 0)])
def test_debruijn_bad_args(k, n):
    with pytest.raises(ArgumentError):
        debruijn_sequence(k, n)


def test_alphabet_render_parse_roundtrip():
    a = Alphabet(62)
    assert "".join(a.render(s) for s in range(62))[-3:] == "xyz"
    assert all(a.parse(a.render(s)) == s for s in range(62))
    with pytest.raises(ArgumentError):
        Alphabet(3).parse("3")
    with pytest.raises(ArgumentError):
        Alphabet(0)
