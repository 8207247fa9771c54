"""Generation, canonicalization, and counting of cyclic word classes:
necklaces, bracelets, aperiodic (Lyndon) words, fixed-content variants,
vector compositions, multiset permutations, and minimal full-coverage
cyclic sequences."""

from .compositions import (
    counting_vectors,
    iter_counting_vectors,
    iter_multi_index_compositions,
    iter_multiset_permutations,
    multi_index_compositions,
    multiset_permutations,
)
from .counting import (
    count_bracelets,
    count_lyndon,
    count_necklaces,
    divisors,
    moebius,
    totient,
)
from .debruijn import (
    DEFAULT_SEQUENCE_LIMIT,
    DeBruijnSequence,
    VerificationResult,
    build_de_bruijn,
    circular_windows,
    verify_de_bruijn,
)
from .generators import (
    DEFAULT_ORACLE_LIMIT,
    RepresentativeList,
    ResourceLimitError,
    all_bracelets,
    all_necklaces,
    fixed_content_bracelets,
    fixed_content_necklaces,
    iter_all_bracelets,
    iter_all_necklaces,
    iter_fixed_content_bracelets,
    iter_fixed_content_necklaces,
    iter_lyndon_words,
    lyndon_words,
    multinomial,
    oracle_fixed_content,
)
from .words import (
    Alphabet,
    Orbit,
    OrbitKind,
    Periodicity,
    Word,
    canonical,
    dihedral_orbit,
    periodicity,
    reflect,
    rotate,
    rotation_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "DeBruijnSequence",
    "DEFAULT_ORACLE_LIMIT",
    "DEFAULT_SEQUENCE_LIMIT",
    "Orbit",
    "OrbitKind",
    "Periodicity",
    "RepresentativeList",
    "ResourceLimitError",
    "VerificationResult",
    "Word",
    "all_bracelets",
    "all_necklaces",
    "build_de_bruijn",
    "canonical",
    "circular_windows",
    "count_bracelets",
    "count_lyndon",
    "count_necklaces",
    "counting_vectors",
    "dihedral_orbit",
    "divisors",
    "fixed_content_bracelets",
    "fixed_content_necklaces",
    "iter_all_bracelets",
    "iter_all_necklaces",
    "iter_counting_vectors",
    "iter_fixed_content_bracelets",
    "iter_fixed_content_necklaces",
    "iter_lyndon_words",
    "iter_multi_index_compositions",
    "iter_multiset_permutations",
    "lyndon_words",
    "moebius",
    "multi_index_compositions",
    "multinomial",
    "multiset_permutations",
    "oracle_fixed_content",
    "periodicity",
    "reflect",
    "rotate",
    "rotation_orbit",
    "totient",
    "verify_de_bruijn",
]
