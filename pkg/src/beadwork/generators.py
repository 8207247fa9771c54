"""Enumeration of canonical necklace, bracelet and Lyndon representatives.

Two independent routes produce the same sorted lists:

* the efficient path extends pre-necklaces symbol by symbol, so canonical
  forms stream out in lexicographic order without ever materializing the
  m^n plain words;
* the oracle path spells out every multiset permutation of a content
  vector and keeps the words that are their own canonical form.  It is
  factorial-sized and guarded by a word budget, but trivially correct,
  which makes it the reference the efficient path is tested against.

The pre-necklace extension rule: while scanning positions left to right,
a[t] may never drop below a[t-p] (p = period of the prefix so far); writing
exactly a[t-p] keeps the period, writing more restarts it at t.  A finished
string is a necklace iff its period divides n, and aperiodic (Lyndon) iff
the period equals n.
"""

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .compositions import iter_multiset_permutations
from .words import Alphabet, OrbitKind, Word, _coerce_kind, _rotation_set

DEFAULT_ORACLE_LIMIT = 10_000_000

_INVALID_NM = "n and m must be positive integers"


class ResourceLimitError(RuntimeError):
    """Raised when a request would exceed a configured enumeration budget."""


@dataclass(frozen=True)
class RepresentativeList:
    """Sorted canonical representatives together with their count."""

    words: tuple

    @property
    def count(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __getitem__(self, index):
        return self.words[index]


def _check_all_args(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise ValueError(_INVALID_NM)


def _check_content(content: Sequence[int]) -> tuple:
    content = tuple(content)
    if not content:
        raise ValueError("content vector must have at least one part")
    if any(part < 0 for part in content):
        raise ValueError("content parts must be non-negative")
    if sum(content) < 1:
        raise ValueError("content vector must have a positive total")
    return content


def _iter_prenecklace_leaves(n: int, m: int, fn: int) -> Iterator[tuple]:
    """Yield (symbols, prefix_length) for every necklace of length n over
    {fn..fn+m-1}, in lexicographic order.

    This is the classic iterative scheme: repeatedly increment the last
    position that can grow, refill the tail periodically, and emit whenever
    the new period divides n.  The prefix length is the length of the
    aperiodic prefix of the emitted necklace.
    """
    a = [fn] * (n + 1)
    yield tuple(a[1:]), 1
    if m == 1:
        return
    top = fn + m - 1
    while True:
        t = n
        while a[t] == top:
            t -= 1
        if t == 0:
            return
        a[t] += 1
        if t < n:
            reps = (n - t) // t + 1
            a[t + 1 :] = (a[1 : t + 1] * reps)[: n - t]
        if n % t == 0:
            yield tuple(a[1:]), t


def _min_rotation(symbols: tuple) -> tuple:
    return min(symbols[i:] + symbols[:i] for i in range(len(symbols)))


def _is_dihedral_rep(symbols: tuple) -> bool:
    """True when a rotation-canonical word is also minimal among the
    rotations of its reflection."""
    return symbols <= _min_rotation(symbols[::-1])


def iter_all_necklaces(n: int, m: int, fn: int = 1) -> Iterator[Word]:
    """Stream canonical necklace representatives of length n over the
    alphabet {fn..fn+m-1}, in lexicographic order."""
    _check_all_args(n, m)
    alphabet = Alphabet(m, fn)
    return (
        Word._wrap(symbols, alphabet)
        for symbols, _ in _iter_prenecklace_leaves(n, m, fn)
    )


def iter_all_bracelets(n: int, m: int, fn: int = 1) -> Iterator[Word]:
    """Stream canonical bracelet representatives: the necklace stream
    filtered down to words minimal under reflection as well."""
    _check_all_args(n, m)
    alphabet = Alphabet(m, fn)
    return (
        Word._wrap(symbols, alphabet)
        for symbols, _ in _iter_prenecklace_leaves(n, m, fn)
        if _is_dihedral_rep(symbols)
    )


def iter_lyndon_words(n: int, m: int, fn: int = 1) -> Iterator[Word]:
    """Stream Lyndon words (aperiodic necklace representatives) of length n,
    in lexicographic order."""
    _check_all_args(n, m)
    alphabet = Alphabet(m, fn)
    return (
        Word._wrap(symbols, alphabet)
        for symbols, prefix_len in _iter_prenecklace_leaves(n, m, fn)
        if prefix_len == n
    )


def all_necklaces(n: int, m: int, fn: int = 1) -> RepresentativeList:
    """All necklace representatives of length n over m symbols, sorted."""
    return RepresentativeList(tuple(iter_all_necklaces(n, m, fn)))


def all_bracelets(n: int, m: int, fn: int = 1) -> RepresentativeList:
    """All bracelet representatives of length n over m symbols, sorted."""
    return RepresentativeList(tuple(iter_all_bracelets(n, m, fn)))


def lyndon_words(n: int, m: int, fn: int = 1) -> RepresentativeList:
    """All Lyndon words of length n over m symbols, sorted."""
    return RepresentativeList(tuple(iter_lyndon_words(n, m, fn)))


def _iter_fixed_leaves(content: tuple, fn: int) -> Iterator[tuple]:
    """Pre-necklace extension restricted to a fixed symbol content.

    Same rule as the unrestricted engine, with branches pruned when a
    symbol's remaining budget is exhausted.  Placing n symbols consumes the
    whole budget, so every leaf automatically has the requested content.
    """
    m = len(content)
    n = sum(content)
    a = [fn] * (n + 1)
    remaining = list(content)

    def extend(t, p):
        if t > n:
            if n % p == 0:
                yield tuple(a[1:])
            return
        low = a[t - p]
        for j in range(low - fn, m):
            if remaining[j]:
                remaining[j] -= 1
                symbol = fn + j
                a[t] = symbol
                yield from extend(t + 1, p if symbol == low else t)
                remaining[j] += 1

    return extend(1, 1)


def iter_fixed_content_necklaces(
    content: Sequence[int], fn: int = 1
) -> Iterator[Word]:
    """Stream necklace representatives in which symbol fn+j occurs
    content[j] times, in lexicographic order."""
    content = _check_content(content)
    alphabet = Alphabet(len(content), fn)
    return (
        Word._wrap(symbols, alphabet)
        for symbols in _iter_fixed_leaves(content, fn)
    )


def iter_fixed_content_bracelets(
    content: Sequence[int], fn: int = 1
) -> Iterator[Word]:
    """Stream bracelet representatives of the given content, sorted."""
    content = _check_content(content)
    alphabet = Alphabet(len(content), fn)
    return (
        Word._wrap(symbols, alphabet)
        for symbols in _iter_fixed_leaves(content, fn)
        if _is_dihedral_rep(symbols)
    )


def fixed_content_necklaces(
    content: Sequence[int], fn: int = 1
) -> RepresentativeList:
    """Necklace representatives of a fixed content vector, sorted."""
    return RepresentativeList(tuple(iter_fixed_content_necklaces(content, fn)))


def fixed_content_bracelets(
    content: Sequence[int], fn: int = 1
) -> RepresentativeList:
    """Bracelet representatives of a fixed content vector, sorted."""
    return RepresentativeList(tuple(iter_fixed_content_bracelets(content, fn)))


def multinomial(content: Sequence[int]) -> int:
    """Number of distinct words with the given content vector."""
    total = sum(content)
    result = factorial(total)
    for part in content:
        result //= factorial(part)
    return result


def oracle_fixed_content(
    content: Sequence[int],
    fn: int = 1,
    kind=OrbitKind.ROTATION,
    limit: int = DEFAULT_ORACLE_LIMIT,
) -> RepresentativeList:
    """Brute-force reference: enumerate every multiset permutation of the
    content and keep the words equal to their own canonical form.

    The enumeration is factorial in size, so it refuses to start when the
    word count exceeds `limit`.
    """
    content = _check_content(content)
    kind = _coerce_kind(kind)
    total = multinomial(content)
    if total > limit:
        raise ResourceLimitError(
            f"{total} words exceed the oracle budget of {limit}"
        )
    symbols = []
    for j, count in enumerate(content):
        symbols.extend([fn + j] * count)
    alphabet = Alphabet(len(content), fn)
    # Canonical filter built from the orbit sets, kept separate from the
    # efficient path's minimal-rotation shortcut so the two routes stay
    # independently checkable.
    if kind is OrbitKind.ROTATION:
        reps = [
            w
            for w in iter_multiset_permutations(symbols)
            if w == min(_rotation_set(w))
        ]
    else:
        reps = [
            w
            for w in iter_multiset_permutations(symbols)
            if w == min(_rotation_set(w) | _rotation_set(w[::-1]))
        ]
    return RepresentativeList(tuple(Word._wrap(w, alphabet) for w in reps))
