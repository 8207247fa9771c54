"""Timing harness comparing the direct necklace generator against the
filter-based oracle route, with CSV and chart output."""

import csv
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .compositions import iter_counting_vectors
from .generators import DEFAULT_ORACLE_LIMIT, all_necklaces, oracle_fixed_content


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    count: int
    efficient_seconds: float
    oracle_seconds: Optional[float]

    @property
    def speedup(self) -> Optional[float]:
        if self.oracle_seconds is None or self.efficient_seconds <= 0:
            return None
        return self.oracle_seconds / self.efficient_seconds


def _time(fn, repeats: int) -> float:
    # min over repeats: scheduling noise only ever adds time
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return best


def _oracle_all(n: int, m: int, fn: int) -> list:
    words = []
    for content in iter_counting_vectors(n, m):
        words.extend(oracle_fixed_content(content, fn=fn, limit=DEFAULT_ORACLE_LIMIT))
    words.sort()
    return words


def run_benchmark(
    sizes: Sequence[int] = (8, 9, 10, 11, 12, 14, 16, 18, 20),
    m: int = 2,
    fn: int = 1,
    oracle_cutoff: int = 12,
    repeats: int = 3,
) -> list:
    """Time all-necklace generation for each n in sizes.

    The oracle route (multiset permutations filtered to canonical words)
    is timed only up to oracle_cutoff; beyond that its cost is
    prohibitive and the row records the direct generator alone.
    """
    rows = []
    for n in sizes:
        words = all_necklaces(n, m, fn=fn)
        efficient = _time(lambda: all_necklaces(n, m, fn=fn), repeats)
        oracle = None
        if n <= oracle_cutoff:
            oracle_words = _oracle_all(n, m, fn)
            if [w.symbols for w in oracle_words] != [w.symbols for w in words]:
                raise AssertionError(
                    f"oracle and direct routes disagree at n={n}, m={m}"
                )
            oracle = _time(lambda: _oracle_all(n, m, fn), repeats)
        rows.append(
            BenchRow(
                n=n,
                m=m,
                count=len(words),
                efficient_seconds=efficient,
                oracle_seconds=oracle,
            )
        )
    return rows


def write_csv(rows: Sequence[BenchRow], path: str) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["n", "m", "count", "efficient_seconds", "oracle_seconds", "speedup"]
        )
        for row in rows:
            writer.writerow(
                [
                    row.n,
                    row.m,
                    row.count,
                    f"{row.efficient_seconds:.6f}",
                    "" if row.oracle_seconds is None else f"{row.oracle_seconds:.6f}",
                    "" if row.speedup is None else f"{row.speedup:.1f}",
                ]
            )


def plot_png(rows: Sequence[BenchRow], path: str) -> None:
    """Render runtimes against word length on a log-scaled time axis."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = [row.n for row in rows]
    ax.plot(xs, [row.efficient_seconds for row in rows], "o-", label="direct")
    oracle_pts = [(r.n, r.oracle_seconds) for r in rows if r.oracle_seconds is not None]
    if oracle_pts:
        ax.plot(
            [p[0] for p in oracle_pts],
            [p[1] for p in oracle_pts],
            "s--",
            label="permutation filter",
        )
    ax.set_yscale("log")
    ax.set_xlabel("word length n")
    ax.set_ylabel("seconds")
    ax.set_title(f"All-necklace generation, m={rows[0].m}" if rows else "benchmark")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
