"""Lexicographically minimal de Bruijn sequences via necklace concatenation.

Concatenating the aperiodic prefixes of all length-n necklace
representatives in increasing order yields the smallest cyclic sequence in
which every length-n word over the alphabet appears exactly once.  The
block boundaries (one block per necklace) are kept on the sequence so the
separated rendering and window reports need no recomputation.
"""

from dataclasses import dataclass
from typing import Optional

from .generators import ResourceLimitError, _check_all_args, _iter_prenecklace_leaves
from .words import Alphabet, Word

DEFAULT_SEQUENCE_LIMIT = 1 << 26


@dataclass(frozen=True)
class DeBruijnSequence:
    """Sequence of m^n symbols tiled by the aperiodic-prefix blocks of the
    sorted necklace representatives."""

    symbols: tuple
    order: int
    alphabet: Alphabet
    blocks: tuple  # half-open (start, stop) index ranges, tiling in order

    def __len__(self) -> int:
        return len(self.symbols)

    def block_symbols(self, index: int) -> tuple:
        start, stop = self.blocks[index]
        return self.symbols[start:stop]


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of a de Bruijn check, with the offending window on failure."""

    ok: bool
    message: str
    duplicate: Optional[Word] = None
    missing: Optional[Word] = None

    def __bool__(self) -> bool:
        return self.ok


def build_de_bruijn(
    n: int,
    m: int,
    fn: int = 0,
    max_symbols: int = DEFAULT_SEQUENCE_LIMIT,
) -> DeBruijnSequence:
    """Construct the minimal de Bruijn sequence of order n over the
    alphabet {fn..fn+m-1}; its length is m^n."""
    _check_all_args(n, m)
    total = m**n
    if total > max_symbols:
        raise ResourceLimitError(
            f"sequence of {total} symbols exceeds the limit of {max_symbols}"
        )
    symbols = []
    blocks = []
    pos = 0
    for word, prefix_len in _iter_prenecklace_leaves(n, m, fn):
        symbols.extend(word[:prefix_len])
        blocks.append((pos, pos + prefix_len))
        pos += prefix_len
    return DeBruijnSequence(
        symbols=tuple(symbols),
        order=n,
        alphabet=Alphabet(m, fn),
        blocks=tuple(blocks),
    )


def render(seq: DeBruijnSequence, separator: Optional[str] = None) -> str:
    """Text form of the sequence.

    Single-digit alphabets concatenate symbols directly, and a separator,
    when given, marks the block boundaries.  Alphabets with multi-character
    symbols are ambiguous in flat form, so they require a separator, which
    is then placed between individual symbols instead.
    """
    if seq.alphabet.single_digit:
        if separator is None:
            return "".join(str(s) for s in seq.symbols)
        return separator.join(
            "".join(str(s) for s in seq.block_symbols(i))
            for i in range(len(seq.blocks))
        )
    if separator is None:
        raise ValueError(
            "alphabet symbols need more than one character; pass a separator"
        )
    return separator.join(str(s) for s in seq.symbols)


def circular_windows(seq: DeBruijnSequence) -> list:
    """The m^n length-n windows of the sequence read circularly, in
    positional order: the sequence is extended by its own first n-1
    symbols and scanned left to right."""
    n = seq.order
    length = len(seq.symbols)
    extended = seq.symbols
    while len(extended) < length + n - 1:
        extended = extended + seq.symbols[: length + n - 1 - len(extended)]
    return [
        Word._wrap(extended[i : i + n], seq.alphabet) for i in range(length)
    ]


def _window_counts(symbols: tuple, n: int) -> dict:
    length = len(symbols)
    extended = symbols
    while len(extended) < length + n - 1:
        extended = extended + symbols[: length + n - 1 - len(extended)]
    counts = {}
    for i in range(length):
        w = extended[i : i + n]
        counts[w] = counts.get(w, 0) + 1
    return counts


def verify_de_bruijn(
    candidate: Word,
    n: int,
    max_symbols: int = DEFAULT_SEQUENCE_LIMIT,
) -> VerificationResult:
    """Check that every length-n word over the candidate's alphabet occurs
    exactly once among its circular windows."""
    if n < 1:
        raise ValueError("the window length must be a positive integer")
    m = candidate.alphabet.arity
    expected = m**n
    if expected > max_symbols:
        raise ResourceLimitError(
            f"verification of {expected} windows exceeds the limit of {max_symbols}"
        )
    if len(candidate) != expected:
        return VerificationResult(
            ok=False,
            message=(
                f"length {len(candidate)} differs from m^n = {expected}"
            ),
        )
    counts = _window_counts(candidate.symbols, n)
    duplicates = sorted(w for w, c in counts.items() if c > 1)
    if not duplicates:
        return VerificationResult(
            ok=True,
            message=f"all {expected} windows of length {n} occur exactly once",
        )
    # With the right total length, a duplicate forces a missing window;
    # report the smallest of each.
    duplicate = Word._wrap(duplicates[0], candidate.alphabet)
    missing = _first_missing_window(counts, n, candidate.alphabet)
    return VerificationResult(
        ok=False,
        message=(
            f"window {duplicate} occurs {counts[duplicates[0]]} times"
            + (f"; window {missing} is missing" if missing else "")
        ),
        duplicate=duplicate,
        missing=missing,
    )


def _first_missing_window(counts, n, alphabet) -> Optional[Word]:
    """Lexicographically smallest absent window, found by counting up
    through the alphabet odometer-style."""
    lo = alphabet.offset
    hi = alphabet.max_symbol
    current = [lo] * n
    while True:
        if tuple(current) not in counts:
            return Word._wrap(tuple(current), alphabet)
        i = n - 1
        while i >= 0 and current[i] == hi:
            current[i] = lo
            i -= 1
        if i < 0:
            return None
        current[i] += 1
