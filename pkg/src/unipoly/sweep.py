"""Deterministic t0 sweeps, serial or process-parallel.

A sweep walks an indexed stream of t0 values (full enumeration in packed
order, or a pregenerated seeded draw list), profiles f - t0 for each, and
feeds the results to a fold in strict index order.  Work is cut into
fixed-size chunks regardless of worker count and chunk results are
consumed in submission order, so folds, early stopping, and every report
derived from them are byte-identical for any --workers value.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Protocol

from .field import FieldSpec

CHUNK = 256

ProfileTriples = tuple[tuple[int, int, int], ...]


def profile_chunk(ext: FieldSpec, f_packed: tuple[int, ...], t0s: list[int]) -> list[ProfileTriples]:
    """Degree-profile triples of f - t0 for each t0; the worker kernel loop."""
    k = ext.kernel
    base = list(f_packed)
    out = []
    for t0 in t0s:
        coeffs = list(base)
        coeffs[0] = k.esub(coeffs[0], t0)
        out.append(tuple(tuple(t) for t in k.profile(coeffs)))
    return out


class SweepFold(Protocol):
    def update(self, index: int, t0: int, profile: ProfileTriples) -> bool:
        """Consume one result; return True to stop the sweep early."""
        ...


def exhaustive_stream(order: int, start: int = 0) -> Iterator[tuple[int, int]]:
    """(index, t0) pairs over the whole field in packed order."""
    for i in range(start, order):
        yield (i, i)


def seeded_draws(seed_text: str, order: int, count: int) -> list[int]:
    """Uniform draws with replacement; reproducible from the seed text alone."""
    rng = random.Random(seed_text)
    return [rng.randrange(order) for _ in range(count)]


def draw_stream(draws: list[int], start: int = 0) -> Iterator[tuple[int, int]]:
    for i in range(start, len(draws)):
        yield (i, draws[i])


def _chunks(pairs: Iterable[tuple[int, int]]) -> Iterator[tuple[int, list[int]]]:
    block_start = None
    block: list[int] = []
    for i, t0 in pairs:
        if block_start is None:
            block_start = i
        block.append(t0)
        if len(block) == CHUNK:
            yield (block_start, block)
            block_start, block = None, []
    if block:
        yield (block_start, block)


def run_sweep(ext: FieldSpec, f_packed: tuple[int, ...],
              pairs: Iterable[tuple[int, int]], fold: SweepFold,
              workers: int = 1) -> bool:
    """Run the sweep; returns True if the fold stopped it early.

    The fold sees every result strictly in index order up to the stopping
    point, independent of the worker count.
    """
    if workers <= 1:
        for start, t0s in _chunks(pairs):
            profiles = profile_chunk(ext, f_packed, t0s)
            for off, (t0, prof) in enumerate(zip(t0s, profiles)):
                if fold.update(start + off, t0, prof):
                    return True
        return False

    chunk_iter = _chunks(pairs)
    window = 2 * workers
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = []
        for _ in range(window):
            item = next(chunk_iter, None)
            if item is None:
                break
            start, t0s = item
            pending.append((start, t0s, pool.submit(profile_chunk, ext, f_packed, t0s)))
        while pending:
            start, t0s, fut = pending.pop(0)
            profiles = fut.result()
            stopped = False
            for off, (t0, prof) in enumerate(zip(t0s, profiles)):
                if fold.update(start + off, t0, prof):
                    stopped = True
                    break
            if stopped:
                pool.shutdown(cancel_futures=True)
                return True
            item = next(chunk_iter, None)
            if item is not None:
                nstart, nt0s = item
                pending.append((nstart, nt0s, pool.submit(profile_chunk, ext, f_packed, nt0s)))
    return False
