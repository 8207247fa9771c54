"""Closed-form class counts, cross-checked by brute-force canonicalization."""

import itertools

import pytest

from beadwork.counting import (
    count_bracelets,
    count_lyndon,
    count_necklaces,
    divisors,
    moebius,
    totient,
)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(13) == [1, 13]


def test_totient():
    expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert [totient(n) for n in range(1, 13)] == expected


def test_moebius():
    expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert [moebius(n) for n in range(1, 13)] == expected


def test_known_counts():
    assert count_necklaces(6, 2) == 14
    assert count_bracelets(6, 2) == 13
    assert count_necklaces(4, 2) == 6
    assert count_bracelets(4, 2) == 6
    assert count_necklaces(2, 3) == 6
    assert count_necklaces(20, 2) == 52488
    assert count_necklaces(12, 2) == 352
    assert count_lyndon(4, 2) == 3


def test_degenerate_counts():
    assert count_necklaces(1, 7) == 7
    assert count_bracelets(1, 7) == 7
    assert count_lyndon(1, 7) == 7
    assert count_necklaces(9, 1) == 1
    assert count_lyndon(9, 1) == 0  # 1^9 is periodic


@pytest.mark.parametrize("fn", [count_necklaces, count_bracelets, count_lyndon])
@pytest.mark.parametrize("n,m", [(0, 2), (2, 0), (-3, 2)])
def test_rejects_nonpositive(fn, n, m):
    with pytest.raises(ValueError, match="n and m must be positive integers"):
        fn(n, m)


def _brute_counts(n, m):
    """Count classes by canonicalizing every word directly."""
    necklaces = set()
    bracelets = set()
    lyndon = 0
    for word in itertools.product(range(m), repeat=n):
        rots = {word[i:] + word[:i] for i in range(n)}
        rep = min(rots)
        if rep == word:
            if len(rots) == n:
                lyndon += 1
            rev = word[::-1]
            bracelets.add(min(min(rots), min(rev[i:] + rev[:i] for i in range(n))))
        necklaces.add(rep)
    return len(necklaces), len(bracelets), lyndon


@pytest.mark.parametrize("n,m", [(1, 4), (2, 3), (4, 2), (5, 2), (6, 2), (4, 3), (3, 4)])
def test_formulas_match_brute_force(n, m):
    necklaces, bracelets, lyndon = _brute_counts(n, m)
    assert count_necklaces(n, m) == necklaces
    assert count_bracelets(n, m) == bracelets
    assert count_lyndon(n, m) == lyndon


def test_lyndon_words_tile_all_words():
    # every word is a unique power of a rotated aperiodic word
    for m in (2, 3):
        for n in range(1, 11):
            assert sum(d * count_lyndon(d, m) for d in divisors(n)) == m**n


def test_bracelets_never_exceed_necklaces():
    for n in range(1, 16):
        for m in (2, 3, 4):
            b = count_bracelets(n, m)
            nn = count_necklaces(n, m)
            assert b <= nn <= 2 * b


def test_exact_at_scale():
    # bigint path: no float rounding anywhere
    total = sum(totient(d) * 2 ** (100 // d) for d in divisors(100))
    assert total % 100 == 0
    assert count_necklaces(100, 2) == total // 100
    assert count_lyndon(60, 3) == sum(
        moebius(d) * 3 ** (60 // d) for d in divisors(60)
    ) // 60
