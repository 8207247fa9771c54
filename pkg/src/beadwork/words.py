"""Words over an offset integer alphabet and their cyclic/dihedral symmetries.

A word is a fixed-length sequence of symbols drawn from a contiguous integer
alphabet {offset, offset+1, ..., offset+arity-1}.  Rotating a word cyclically
(and optionally reversing it) partitions the set of all words into orbits;
the lexicographically smallest member of an orbit is its canonical
representative.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class OrbitKind(Enum):
    """Group action used to build an orbit: rotations only, or rotations
    plus reflections."""

    ROTATION = "rotation"
    DIHEDRAL = "dihedral"


@dataclass(frozen=True)
class Alphabet:
    """Contiguous integer alphabet of `arity` symbols starting at `offset`."""

    arity: int
    offset: int = 0

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("alphabet arity must be a positive integer")

    @property
    def symbols(self) -> range:
        return range(self.offset, self.offset + self.arity)

    def __contains__(self, symbol: int) -> bool:
        return self.offset <= symbol < self.offset + self.arity

    @property
    def max_symbol(self) -> int:
        return self.offset + self.arity - 1

    @property
    def single_digit(self) -> bool:
        """True when every symbol renders as one character (0..9)."""
        return self.offset >= 0 and self.max_symbol <= 9


class Word:
    """Immutable symbol sequence over an Alphabet, ordered lexicographically.

    Symbols are validated once at construction; all symmetry operations
    return new Word values.
    """

    __slots__ = ("symbols", "alphabet")

    symbols: tuple
    alphabet: Alphabet

    def __init__(self, symbols: Iterable[int], alphabet: Alphabet):
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError("a word must contain at least one symbol")
        lo = alphabet.offset
        hi = lo + alphabet.arity
        for s in symbols:
            if not (lo <= s < hi):
                raise ValueError(
                    f"symbol {s} outside alphabet range [{lo}, {hi - 1}]"
                )
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "alphabet", alphabet)

    @classmethod
    def _wrap(cls, symbols: tuple, alphabet: Alphabet) -> "Word":
        # Fast path for internal callers that guarantee valid symbols.
        w = object.__new__(cls)
        object.__setattr__(w, "symbols", symbols)
        object.__setattr__(w, "alphabet", alphabet)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.symbols == other.symbols and self.alphabet == other.alphabet

    def __hash__(self) -> int:
        return hash((self.symbols, self.alphabet))

    def __lt__(self, other: "Word") -> bool:
        return self.symbols < other.symbols

    def __le__(self, other: "Word") -> bool:
        return self.symbols <= other.symbols

    def __gt__(self, other: "Word") -> bool:
        return self.symbols > other.symbols

    def __ge__(self, other: "Word") -> bool:
        return self.symbols >= other.symbols

    def __str__(self) -> str:
        if self.alphabet.single_digit:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    def __repr__(self) -> str:
        return f"Word({self.symbols!r}, {self.alphabet!r})"


@dataclass(frozen=True)
class Orbit:
    """Equivalence class of a word under the chosen group action.

    Members are stored sorted; the representative is the smallest member.
    """

    kind: OrbitKind
    members: tuple

    @property
    def representative(self) -> Word:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Periodicity:
    """Decomposition of a word as `repetitions` copies of its shortest
    repeating prefix (which is itself aperiodic)."""

    prefix: Word
    repetitions: int

    @property
    def aperiodic(self) -> bool:
        return self.repetitions == 1


def _coerce_kind(kind) -> OrbitKind:
    if isinstance(kind, OrbitKind):
        return kind
    return OrbitKind(kind)


def rotate(word: Word, j: int) -> Word:
    """Cyclic left shift by j positions; j may be any integer."""
    n = len(word.symbols)
    j %= n
    if j == 0:
        return word
    s = word.symbols
    return Word._wrap(s[j:] + s[:j], word.alphabet)


def reflect(word: Word) -> Word:
    """Reverse the symbol order."""
    return Word._wrap(word.symbols[::-1], word.alphabet)


def _rotation_set(symbols: tuple) -> set:
    return {symbols[i:] + symbols[:i] for i in range(len(symbols))}


def rotation_orbit(word: Word) -> Orbit:
    """All distinct rotations of the word, sorted lexicographically."""
    members = sorted(_rotation_set(word.symbols))
    alphabet = word.alphabet
    return Orbit(
        OrbitKind.ROTATION,
        tuple(Word._wrap(s, alphabet) for s in members),
    )


def dihedral_orbit(word: Word) -> Orbit:
    """All distinct rotations of the word and of its reflection, sorted."""
    members = sorted(
        _rotation_set(word.symbols) | _rotation_set(word.symbols[::-1])
    )
    alphabet = word.alphabet
    return Orbit(
        OrbitKind.DIHEDRAL,
        tuple(Word._wrap(s, alphabet) for s in members),
    )


def canonical(word: Word, kind=OrbitKind.ROTATION) -> Word:
    """Lexicographically smallest member of the word's orbit."""
    kind = _coerce_kind(kind)
    best = min(_rotation_set(word.symbols))
    if kind is OrbitKind.DIHEDRAL:
        best = min(best, min(_rotation_set(word.symbols[::-1])))
    return Word._wrap(best, word.alphabet)


def periodicity(word: Word) -> Periodicity:
    """Shortest prefix b and largest r such that the word equals b repeated
    r times; r == 1 means the word is aperiodic."""
    s = word.symbols
    n = len(s)
    for d in range(1, n + 1):
        if n % d == 0 and s[:d] * (n // d) == s:
            return Periodicity(Word._wrap(s[:d], word.alphabet), n // d)
    raise AssertionError("unreachable: d = n always reconstructs the word")
