"""Multiset permutations, weak compositions and multi-index compositions.

Content vectors and compositions are plain integer tuples.  All generators
emit results in lexicographic order (by the flattened tuple for multi-index
compositions) with no duplicates, so list outputs are sorted by
construction.
"""

import itertools
from typing import Iterator, Sequence


def iter_multiset_permutations(values: Sequence[int]) -> Iterator[tuple]:
    """Distinct orderings of the multiset `values`, in lexicographic order.

    Duplicates are suppressed by successor generation on the sorted input
    (find the rightmost ascent, swap with the smallest larger suffix entry,
    reverse the tail), never by post-hoc dedup.
    """
    a = sorted(values)
    if not a:
        raise ValueError("cannot permute an empty sequence")

    def successors(a):
        n = len(a)
        while True:
            yield tuple(a)
            i = n - 2
            while i >= 0 and a[i] >= a[i + 1]:
                i -= 1
            if i < 0:
                return
            j = n - 1
            while a[j] <= a[i]:
                j -= 1
            a[i], a[j] = a[j], a[i]
            a[i + 1 :] = a[: i : -1]

    return successors(a)


def multiset_permutations(values: Sequence[int]) -> list:
    """All distinct orderings of `values` as a sorted list of tuples."""
    return list(iter_multiset_permutations(values))


def iter_counting_vectors(n: int, m: int) -> Iterator[tuple]:
    """Weak compositions of n into m non-negative parts, lexicographically
    ascending; there are C(n+m-1, m-1) of them."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive integers")

    def rec(remaining, parts_left, prefix):
        if parts_left == 1:
            yield prefix + (remaining,)
            return
        for first in range(remaining + 1):
            yield from rec(remaining - first, parts_left - 1, prefix + (first,))

    return rec(n, m, ())


def counting_vectors(n: int, m: int) -> list:
    """All m-part weak compositions of n as a sorted list of tuples."""
    return list(iter_counting_vectors(n, m))


def iter_multi_index_compositions(
    target: Sequence[int], n: int
) -> Iterator[tuple]:
    """Ordered n-term lists of non-negative vectors summing componentwise to
    `target`, in lexicographic order of the flattened terms."""
    target = tuple(target)
    if n < 1:
        raise ValueError("the number of terms must be a positive integer")
    if not target:
        raise ValueError("the target multi-index must have at least one part")
    if any(part < 0 for part in target):
        raise ValueError("multi-index parts must be non-negative")

    def rec(remaining, terms_left, acc):
        if terms_left == 1:
            yield acc + (remaining,)
            return
        # product varies the rightmost component fastest: lex ascending.
        for head in itertools.product(*(range(r + 1) for r in remaining)):
            rest = tuple(r - h for r, h in zip(remaining, head))
            yield from rec(rest, terms_left - 1, acc + (head,))

    return rec(target, n, ())


def multi_index_compositions(target: Sequence[int], n: int) -> list:
    """All compositions of `target` into n vector terms, sorted."""
    return list(iter_multi_index_compositions(target, n))
