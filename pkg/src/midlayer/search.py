"""Parameter-space search over the construction.

Exhaustive search walks the alpha-prefix tree depth first, so the family
construction for a prefix is done once and shared by every extension; for
a fixed prefix at the target level, each choice of the final alpha vector
only costs one pass over the middle family.  Sequences are totally
ordered by the mixed-radix index whose most significant digit is the
level-2 alpha and least significant the final one; checkpoints and resume
are expressed in that index.

Random and targeted modes sample alpha vectors uniformly per level from a
seeded generator; targeted mode stops once enough hits with the desired
cycle counts were found.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from random import Random
from typing import Iterator

from .analysis import predicted_parity
from .bitcube import AlphaVector, ParameterSequence, format_sequence
from .construct import (
    ConstructionError,
    ConstructionState,
    _advance,
    cycle_spectrum,
    state_for_prefix,
)


@dataclass(frozen=True)
class SearchJob:
    n: int
    mode: str = "exhaustive"  # exhaustive | random | targeted
    target_counts: frozenset[int] | None = None
    limit: int | None = None
    seed: int | None = None
    workers: int = 1
    checkpoint: int = 0
    budget: int = 100_000
    exhaustive_bound: int = 7

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random", "targeted"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and self.n > self.exhaustive_bound:
            raise ValueError(
                f"exhaustive search limited to n <= {self.exhaustive_bound}"
            )
        if self.mode in ("random", "targeted") and self.seed is None:
            raise ValueError(f"{self.mode} mode requires a seed")


@dataclass
class SearchRecord:
    index: int
    alphas: ParameterSequence
    spectrum: dict[int, int]
    wall_ms: float = 0.0

    @property
    def num_cycles(self) -> int:
        return sum(self.spectrum.values())

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "alpha": format_sequence(self.alphas),
            "num_cycles": self.num_cycles,
            "spectrum": {str(k): v for k, v in sorted(self.spectrum.items())},
            "wall_ms": round(self.wall_ms, 3),
        }


def alpha_vectors(level: int) -> list[AlphaVector]:
    """All 2^(level-1) alpha vectors of a level, in enumeration order."""
    width = level - 1
    return [
        tuple((code >> i) & 1 for i in range(width))
        for code in range(1 << width)
    ]


def num_sequences(n: int) -> int:
    """2^binom(n,2) sequences target level n."""
    return 1 << (n * (n - 1) // 2)


def _leaves_below(level: int, n: int) -> int:
    """Sequences per subtree rooted at a level (choices for levels level..n)."""
    count = 1
    for j in range(level, n + 1):
        count <<= j - 1
    return count


def iter_exhaustive(
    n: int,
    start: int = 0,
    prefix: ParameterSequence = (),
    base_index: int | None = None,
) -> Iterator[tuple[int, ParameterSequence, dict[int, int]]]:
    """Yield (index, sequence, spectrum) for all sequences with the given
    prefix and index >= start, in index order."""
    state = state_for_prefix(prefix, k_cap=n)
    if base_index is None:
        base_index = 0
    yield from _walk(state, n, start, base_index)


def _walk(
    state: ConstructionState, n: int, start: int, base: int
) -> Iterator[tuple[int, ParameterSequence, dict[int, int]]]:
    level = state.n
    if level == n:
        for j, alpha in enumerate(alpha_vectors(level)):
            idx = base + j
            if idx >= start:
                yield idx, state.alpha_prefix + (alpha,), cycle_spectrum(state, alpha)
    else:
        sub = _leaves_below(level + 1, n)
        for j, alpha in enumerate(alpha_vectors(level)):
            lo = base + j * sub
            if lo + sub <= start:
                continue
            yield from _walk(_advance(state, alpha), n, start, lo)


def random_sequence(rng: Random, n: int) -> ParameterSequence:
    return tuple(
        tuple(rng.randint(0, 1) for _ in range(i - 1)) for i in range(1, n + 1)
    )


def iter_random(
    n: int, seed: int, start: int = 0
) -> Iterator[tuple[int, ParameterSequence, dict[int, int]]]:
    """Endless seeded stream of (index, sequence, spectrum)."""
    rng = Random(seed)
    cache: dict[ParameterSequence, ConstructionState] = {}
    idx = 0
    while True:
        seq = random_sequence(rng, n)
        if idx >= start:
            # share construction work across the shallow, often-repeated
            # prefix levels; deep states are too rare to be worth keeping
            depth = min(n - 1, 5)
            head = seq[:depth]
            state = cache.get(head)
            if state is None:
                state = state_for_prefix(head, k_cap=n)
                if len(cache) < 512:
                    cache[head] = state
            for alpha in seq[depth:-1]:
                state = _advance(state, alpha)
            yield idx, seq, cycle_spectrum(state, seq[-1])
        idx += 1


# --- parallel exhaustive sweep -----------------------------------------------

def _split_level(n: int, workers: int) -> int:
    """Shallowest level whose prefix count reaches the worker count."""
    count = 1
    for level in range(1, n):
        if count >= workers:
            return level
        count <<= level - 1
    return n


def _prefixes_at(level: int) -> list[ParameterSequence]:
    """All alpha prefixes (alpha_2 .. alpha_{2(level-1)}) in index order."""
    out: list[ParameterSequence] = [()]
    for lv in range(1, level):
        out = [p + (a,) for p in out for a in alpha_vectors(lv)]
    return out


def _worker_sweep(args) -> list[tuple[int, ParameterSequence, dict[int, int]]]:
    n, prefix, base, start = args
    return list(
        iter_exhaustive(n, start=start, prefix=prefix, base_index=base)
    )


def iter_exhaustive_parallel(
    n: int, workers: int, start: int = 0
) -> Iterator[tuple[int, ParameterSequence, dict[int, int]]]:
    """Same stream as iter_exhaustive, produced by a worker pool.

    The prefix tree is split at the shallowest level with >= workers
    subtrees; record order is preserved by consuming subtrees in index
    order.
    """
    if workers <= 1:
        yield from iter_exhaustive(n, start=start)
        return
    level = _split_level(n, workers)
    sub = _leaves_below(level, n)
    tasks = []
    for i, prefix in enumerate(_prefixes_at(level)):
        lo = i * sub
        if lo + sub > start:
            tasks.append((n, prefix, lo, start))
    with multiprocessing.Pool(workers) as pool:
        for chunk in pool.imap(_worker_sweep, tasks):
            yield from chunk


# --- front ends --------------------------------------------------------------

# Exhaustively determined counts of parameter sequences whose 2-factor is a
# single cycle (Hamiltonian cycle) or a pair of cycles (Hamiltonian path).
TABLE1_EXPECTED: dict[int, tuple[int, int]] = {
    1: (1, 0),
    2: (1, 1),
    3: (2, 3),
    4: (6, 12),
    5: (44, 100),
    6: (614, 1580),
    7: (0, 113438),
}


def table1_counts(n: int, workers: int = 1) -> tuple[int, int]:
    """Counts of sequences at level n giving one and two cycles."""
    ones = twos = 0
    for _, _, sp in iter_exhaustive_parallel(n, workers):
        ncyc = sum(sp.values())
        if ncyc == 1:
            ones += 1
        elif ncyc == 2:
            twos += 1
    return ones, twos


@dataclass
class SearchSummary:
    evaluated: int = 0
    hits: int = 0
    written: int = 0
    last_index: int = -1
    parity_failures: int = 0
    records: list[SearchRecord] = field(default_factory=list)


def run_search(job: SearchJob, out_path=None, keep_records: bool = False) -> SearchSummary:
    """Evaluate sequences per the job and append JSONL records.

    Exhaustive mode logs every evaluated sequence unless target counts are
    given, in which case only matches are logged.  Random mode evaluates
    ``limit`` sequences and logs all of them; targeted mode logs matches
    only and stops after ``limit`` hits or ``budget`` evaluations.  Every
    record's parity is checked against the closed-form prediction.
    """
    summary = SearchSummary()
    targets = job.target_counts
    out = open(out_path, "a", encoding="utf-8") if out_path else None
    try:
        if job.mode == "exhaustive":
            stream = iter_exhaustive_parallel(
                job.n, job.workers, start=job.checkpoint
            )
        else:
            stream = iter_random(job.n, job.seed, start=job.checkpoint)
        t0 = time.perf_counter()
        for idx, seq, sp in stream:
            summary.evaluated += 1
            summary.last_index = idx
            ncyc = sum(sp.values())
            if ncyc % 2 != predicted_parity(seq[-1], job.n):
                summary.parity_failures += 1
                raise ConstructionError(
                    f"parity violation at {format_sequence(seq)}: {ncyc} cycles"
                )
            is_hit = targets is not None and ncyc in targets
            if is_hit:
                summary.hits += 1
            log_it = is_hit if targets is not None else True
            if log_it:
                t1 = time.perf_counter()
                rec = SearchRecord(idx, seq, sp, (t1 - t0) * 1000.0)
                t0 = t1
                summary.written += 1
                if out is not None:
                    out.write(json.dumps(rec.to_json()) + "\n")
                if keep_records:
                    summary.records.append(rec)
            if job.mode == "exhaustive":
                continue
            if targets is not None:
                if job.limit is not None and summary.hits >= job.limit:
                    break
                if summary.evaluated >= job.budget:
                    break
            elif summary.evaluated >= (job.limit or job.budget):
                break
    finally:
        if out is not None:
            out.close()
    return summary
