"""Command-line front end.

Five subcommands: ``orbit`` expands a word's rotation or dihedral class,
``generate`` lists necklaces, bracelets, or aperiodic representatives,
``compose`` enumerates vector compositions and multiset permutations,
``debruijn`` builds or checks shortest full-coverage sequences, and
``bench`` times the direct generator against the filter oracle.

Exit codes: 0 on success, 1 when a requested verification fails, 2 for
bad arguments or exceeded resource limits.
"""

import functools
import json
import os

import click

from . import __version__
from .compositions import (
    iter_counting_vectors,
    multi_index_compositions,
    multiset_permutations,
)
from .counting import count_bracelets, count_lyndon, count_necklaces
from .debruijn import (
    DEFAULT_SEQUENCE_LIMIT,
    build_de_bruijn,
    circular_windows,
    render,
    verify_de_bruijn,
)
from .generators import (
    DEFAULT_ORACLE_LIMIT,
    ResourceLimitError,
    all_bracelets,
    all_necklaces,
    fixed_content_bracelets,
    fixed_content_necklaces,
    lyndon_words,
    oracle_fixed_content,
)
from .words import Alphabet, OrbitKind, Word, dihedral_orbit, rotation_orbit
from .bench import plot_png, run_benchmark, write_csv

_FORMATS = click.Choice(["compat", "lines", "json"])


def guarded(fn):
    """Map library errors onto exit code 2 with a single stderr line."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ValueError, ResourceLimitError) as exc:
            click.echo(f"error: {exc}", err=True)
            raise SystemExit(2)

    return wrapper


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def parse_int_vector(text: str) -> tuple:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


def parse_word(
    text: str,
    arity: int = None,
    offset: int = None,
    sep: str = None,
) -> Word:
    """Read a word from its textual form.

    Without a separator every character must be a single digit.  The
    alphabet is taken from the flags when given and inferred from the
    symbol range otherwise.
    """
    if sep is not None:
        parts = [p for p in text.split(sep) if p]
        try:
            symbols = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"expected integers separated by {sep!r}")
    else:
        if not text.isdigit():
            raise ValueError(
                f"{text!r} is not a digit string; pass --sep for spaced symbols"
            )
        symbols = tuple(int(ch) for ch in text)
    if not symbols:
        raise ValueError("the word is empty")
    fn = offset if offset is not None else min(symbols)
    m = arity if arity is not None else max(symbols) - fn + 1
    return Word(symbols, Alphabet(m, fn))


def render_word(word, sep: str = None) -> str:
    symbols = word.symbols if isinstance(word, Word) else tuple(word)
    if sep is not None:
        return sep.join(str(s) for s in symbols)
    if any(len(str(s)) > 1 for s in symbols):
        raise ValueError(
            "alphabet symbols need more than one character; pass --sep"
        )
    return "".join(str(s) for s in symbols)


def format_word_compat(word, index: int = None) -> str:
    symbols = word.symbols if isinstance(word, Word) else tuple(word)
    line = "[ " + " ".join(str(s) for s in symbols) + " ]"
    if index is not None:
        line += f"  ( {index} )"
    return line


def format_parts_compat(parts) -> str:
    return "[" + "".join(
        "( " + " ".join(str(x) for x in part) + " )" for part in parts
    ) + "]"


def _emit_words(words, fmt: str, sep, count: int = None) -> None:
    if fmt == "json":
        if count is not None:
            click.echo(json.dumps({"count": count}))
        for i, w in enumerate(words, start=1):
            symbols = list(w.symbols if isinstance(w, Word) else w)
            click.echo(json.dumps({"word": symbols, "index": i}))
    elif fmt == "lines":
        # render first so a missing --sep fails before anything prints
        rendered = [render_word(w, sep) for w in words]
        if count is not None:
            click.echo(str(count))
        for line in rendered:
            click.echo(line)
    else:
        if count is not None:
            click.echo(str(count))
        for i, w in enumerate(words, start=1):
            click.echo(format_word_compat(w, i))


@click.group()
@click.version_option(version=__version__, prog_name="beadwork")
def main():
    """Generate, canonicalize, and count cyclic word classes."""


@main.command()
@click.argument("word")
@click.option("--dihedral", is_flag=True, help="Include reflections in the class.")
@click.option("-m", "--arity", type=int, default=None, help="Alphabet size.")
@click.option("--offset", type=int, default=None, help="Smallest symbol.")
@click.option("--sep", default=None, help="Symbol separator in WORD and output.")
@click.option("--format", "fmt", type=_FORMATS, default="compat", show_default=True)
@guarded
def orbit(word, dihedral, arity, offset, sep, fmt):
    """List the equivalence class of WORD in increasing order."""
    w = parse_word(word, arity=arity, offset=offset, sep=sep)
    cls = dihedral_orbit(w) if dihedral else rotation_orbit(w)
    _emit_words(cls.members, fmt, sep)


@main.command()
@click.argument("kind", type=click.Choice(["necklaces", "bracelets", "lyndon"]))
@click.option("-n", "--length", "n", type=int, default=None, help="Word length.")
@click.option("-m", "--arity", "m", type=int, default=None, help="Alphabet size.")
@click.option(
    "--content",
    default=None,
    help="Comma-separated symbol multiplicities; replaces -n/-m.",
)
@click.option("--offset", type=int, default=1, show_default=True)
@click.option(
    "--oracle",
    is_flag=True,
    help="Generate through the permutation filter instead of the direct recursion.",
)
@click.option("--count-only", is_flag=True, help="Print the count and stop.")
@click.option("--format", "fmt", type=_FORMATS, default="compat", show_default=True)
@click.option("--sep", default=None, help="Symbol separator for lines output.")
@guarded
def generate(kind, n, m, content, offset, oracle, count_only, fmt, sep):
    """List canonical representatives of KIND in increasing order."""
    if content is not None:
        if n is not None or m is not None:
            raise ValueError("--content replaces -n/-m; pass one or the other")
        if kind == "lyndon":
            raise ValueError("fixed content applies to necklaces and bracelets")
        vector = parse_int_vector(content)
        if oracle:
            limit = _env_int("BEADWORK_ORACLE_LIMIT", DEFAULT_ORACLE_LIMIT)
            orbit_kind = (
                OrbitKind.DIHEDRAL if kind == "bracelets" else OrbitKind.ROTATION
            )
            words = oracle_fixed_content(
                vector, fn=offset, kind=orbit_kind, limit=limit
            )
        elif kind == "necklaces":
            words = fixed_content_necklaces(vector, fn=offset)
        else:
            words = fixed_content_bracelets(vector, fn=offset)
        _emit_words(words, fmt, sep, count=len(words))
        return
    if n is None or m is None:
        raise ValueError("pass both -n and -m, or --content")
    if oracle:
        raise ValueError("--oracle requires --content")
    if count_only:
        counter = {
            "necklaces": count_necklaces,
            "bracelets": count_bracelets,
            "lyndon": count_lyndon,
        }[kind]
        click.echo(str(counter(n, m)))
        return
    maker = {
        "necklaces": all_necklaces,
        "bracelets": all_bracelets,
        "lyndon": lyndon_words,
    }[kind]
    words = maker(n, m, fn=offset)
    _emit_words(words, fmt, sep, count=len(words))


@main.command()
@click.option("--target", default=None, help="Comma-separated vector to decompose.")
@click.option("--parts", type=int, default=None, help="Number of addends.")
@click.option("--counting", is_flag=True, help="List content vectors instead.")
@click.option("--total", type=int, default=None, help="Vector sum for --counting.")
@click.option("-m", "--arity", type=int, default=None, help="Parts for --counting.")
@click.option(
    "--permutations",
    default=None,
    help="Comma-separated multiset whose distinct orderings are listed.",
)
@guarded
def compose(target, parts, counting, total, arity, permutations):
    """Enumerate compositions or multiset permutations in increasing order."""
    modes = sum([target is not None, counting, permutations is not None])
    if modes != 1:
        raise ValueError("pass exactly one of --target, --counting, --permutations")
    if permutations is not None:
        values = parse_int_vector(permutations)
        words = multiset_permutations(values)
        for i, w in enumerate(words, start=1):
            click.echo(format_word_compat(w, i))
        return
    if counting:
        if total is None or arity is None:
            raise ValueError("--counting needs --total and --arity")
        vectors = list(iter_counting_vectors(total, arity))
        click.echo(str(len(vectors)))
        for v in vectors:
            click.echo(format_parts_compat([(x,) for x in v]))
        return
    if parts is None:
        raise ValueError("--target needs --parts")
    vector = parse_int_vector(target)
    rows = multi_index_compositions(vector, parts)
    click.echo(str(len(rows)))
    for row in rows:
        click.echo(format_parts_compat(row))


@main.command()
@click.option("-n", "--order", "n", type=int, required=True, help="Window length.")
@click.option("-m", "--arity", "m", type=int, required=True, help="Alphabet size.")
@click.option("--offset", type=int, default=0, show_default=True)
@click.option("--sep", default=None, help="Block separator (symbol separator when symbols span several characters).")
@click.option("--windows", is_flag=True, help="Print every circular window instead.")
@click.option(
    "--verify",
    "candidate",
    default=None,
    metavar="WORD|@FILE",
    help="Check a sequence instead of building one.",
)
@guarded
def debruijn(n, m, offset, sep, windows, candidate):
    """Build the smallest order-N full-coverage cycle, or verify one."""
    if windows and candidate is not None:
        raise ValueError("--windows and --verify are mutually exclusive")
    limit = _env_int("BEADWORK_SEQUENCE_LIMIT", DEFAULT_SEQUENCE_LIMIT)
    if candidate is not None:
        if candidate.startswith("@"):
            with open(candidate[1:]) as handle:
                candidate = handle.read().strip()
        word = _parse_sequence(candidate, m, offset, sep)
        result = verify_de_bruijn(word, n, max_symbols=limit)
        click.echo(result.message)
        if not result:
            raise SystemExit(1)
        return
    seq = build_de_bruijn(n, m, fn=offset, max_symbols=limit)
    if windows:
        window_sep = None if seq.alphabet.single_digit else sep
        lines = [render_word(w, window_sep) for w in circular_windows(seq)]
        for line in lines:
            click.echo(line)
        return
    click.echo(render(seq, sep))


def _parse_sequence(text: str, m: int, offset: int, sep) -> Word:
    alphabet = Alphabet(m, offset)
    if alphabet.single_digit:
        cleaned = text.replace(sep, "") if sep else text
        if not cleaned.isdigit():
            raise ValueError(
                f"{cleaned!r} is not a digit string; pass --sep for spaced symbols"
            )
        return Word(tuple(int(ch) for ch in cleaned), alphabet)
    if sep is None:
        raise ValueError(
            "alphabet symbols need more than one character; pass --sep"
        )
    return Word(tuple(int(p) for p in text.split(sep) if p), alphabet)


@main.command()
@click.option("--sizes", default="8,9,10,11,12", show_default=True)
@click.option("-m", "--arity", "m", type=int, default=2, show_default=True)
@click.option("--offset", type=int, default=1, show_default=True)
@click.option("--cutoff", type=int, default=12, show_default=True,
              help="Largest n timed through the oracle route.")
@click.option("--repeats", type=int, default=3, show_default=True)
@click.option("--csv", "csv_path", default="bench.csv", show_default=True)
@click.option("--png", "png_path", default="bench.png", show_default=True)
@guarded
def bench(sizes, m, offset, cutoff, repeats, csv_path, png_path):
    """Time the direct generator against the oracle and save a report."""
    parsed = parse_int_vector(sizes)
    rows = run_benchmark(
        sizes=parsed, m=m, fn=offset, oracle_cutoff=cutoff, repeats=repeats
    )
    write_csv(rows, csv_path)
    plot_png(rows, png_path)
    for row in rows:
        line = (
            f"n={row.n} m={row.m} count={row.count} "
            f"direct={row.efficient_seconds:.4f}s"
        )
        if row.oracle_seconds is not None:
            line += f" oracle={row.oracle_seconds:.4f}s speedup={row.speedup:.1f}x"
        click.echo(line)
    click.echo(f"wrote {csv_path} and {png_path}")


if __name__ == "__main__":
    main()
