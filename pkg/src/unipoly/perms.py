"""Cycle-type combinatorics of S_n and a tiny-n permutation-group oracle.

Cycle types are multisets {k: m_k} (m_k cycles of length k) partitioning
n; their S_n densities are exact Fractions.  group_closure enumerates the
group generated by explicit permutations for n <= 8 and computes the
flags (transitive, primitive, contains alternating, symmetric) used to
validate the group-theoretic steps behind the universality criterion.

Permutations are 0-indexed tuples internally; report serialization is
1-indexed cycle notation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import BadPartition, DegreeTooLarge, OutOfRange

_MAX_CLOSURE_DEGREE = 8


class CycleType:
    """Immutable multiset {cycle length: count} summing to n."""

    __slots__ = ("_items", "n")

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = dict(counts)
        for k, m in items.items():
            if k < 1 or m < 0:
                raise BadPartition(f"bad cycle-type entry {k}:{m}")
        self._items = tuple(sorted((k, m) for k, m in items.items() if m > 0))
        self.n = sum(k * m for k, m in self._items)

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        counts: dict[int, int] = {}
        for k in lengths:
            counts[k] = counts.get(k, 0) + 1
        return cls(counts)

    @classmethod
    def of_permutation(cls, perm: tuple[int, ...]) -> "CycleType":
        return cls.from_lengths(_cycle_lengths(perm))

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def count(self, k: int) -> int:
        for length, m in self._items:
            if length == k:
                return m
        return 0

    def contains_length(self, k: int) -> bool:
        return self.count(k) > 0

    def serialize(self) -> str:
        return " ".join(f"{k}^{m}" for k, m in self._items)

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        counts: dict[int, int] = {}
        for chunk in text.split():
            k, _, m = chunk.partition("^")
            counts[int(k)] = counts.get(int(k), 0) + int(m)
        return cls(counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleType):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return f"CycleType({{{', '.join(f'{k}: {m}' for k, m in self._items)}}})"

    def __str__(self) -> str:
        return self.serialize()


def _cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out.append(length)
    return out


def partitions(n: int) -> Iterator[CycleType]:
    """All partitions of n as CycleTypes, in lexicographic part order."""
    if n < 0:
        raise OutOfRange(f"cannot partition {n}")
    if n == 0:
        yield CycleType({})
        return

    def rec(remaining: int, max_part: int, acc: list[int]) -> Iterator[list[int]]:
        if remaining == 0:
            yield list(acc)
            return
        for part in range(min(remaining, max_part), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    for parts in rec(n, n, []):
        yield CycleType.from_lengths(parts)


def cycle_type_probability(n: int, tau: CycleType) -> Fraction:
    """Density of permutations of cycle type tau in S_n: 1 / prod k^m_k * m_k!."""
    if tau.n != n:
        raise BadPartition(f"type {tau} does not partition {n}")
    denom = 1
    for k, m in tau.items():
        denom *= k ** m * math.factorial(m)
    return Fraction(1, denom)


def prob_contains_cycle(n: int, ell: int) -> Fraction:
    """Fraction of permutations in S_n having at least one ell-cycle.

    Summed over all partitions containing ell; equals 1/ell whenever
    ell > n/2 since two such cycles cannot fit.
    """
    if not 1 <= ell <= n or n > 20:
        raise OutOfRange(f"need 1 <= ell <= n <= 20, got ell={ell}, n={n}")
    total = Fraction(0)
    for tau in partitions(n):
        if tau.contains_length(ell):
            total += cycle_type_probability(n, tau)
    return total


@dataclass(frozen=True)
class PermGroup:
    """Closure of a generating set with recomputable structure flags."""
    n: int
    elements: frozenset[tuple[int, ...]]
    transitive: bool
    primitive: bool
    contains_alternating: bool
    is_symmetric: bool

    @property
    def order(self) -> int:
        return len(self.elements)


def _as_perm(n: int, seq) -> tuple[int, ...]:
    p = tuple(int(v) for v in seq)
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {seq}")
    return p


def cycles_to_perm(n: int, cycles: Iterable[Iterable[int]], one_indexed: bool = True) -> tuple[int, ...]:
    """Permutation from disjoint cycle notation."""
    perm = list(range(n))
    off = 1 if one_indexed else 0
    for cyc in cycles:
        pts = [int(v) - off for v in cyc]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return _as_perm(n, perm)


def perm_parity(perm: tuple[int, ...]) -> int:
    """0 for even permutations, 1 for odd."""
    return (len(perm) - len(_cycle_lengths(perm))) % 2


def group_closure(n: int, generators: list[tuple[int, ...]]) -> PermGroup:
    """Breadth-first closure of the generators with structure flags.

    Composition is vectorized over the frontier; elements are deduplicated
    through their base-n packing, so the closure of S_8 (40320 elements)
    stays fast enough for repeated randomized runs.
    """
    if n < 1 or n > _MAX_CLOSURE_DEGREE:
        raise DegreeTooLarge(f"closure supported for 1 <= n <= {_MAX_CLOSURE_DEGREE}, got {n}")
    gens = [_as_perm(n, g) for g in generators]
    identity = tuple(range(n))
    radix = np.array([n ** i for i in range(n)], dtype=np.int64)

    def pack_rows(rows: np.ndarray) -> np.ndarray:
        return rows @ radix

    seen: set[int] = {int(pack_rows(np.array([identity], dtype=np.int64))[0])}
    all_rows = [np.array([identity], dtype=np.int64)]
    frontier = np.array([identity], dtype=np.int64)
    if gens:
        garr = [np.array(g, dtype=np.int64) for g in gens]
        while frontier.size:
            new_chunks = []
            for g in garr:
                composed = frontier[:, g]  # rows sigma∘g
                keys = pack_rows(composed)
                fresh = [j for j, key in enumerate(keys) if int(key) not in seen]
                if fresh:
                    block = composed[fresh]
                    # dedupe within the block
                    _, idx = np.unique(pack_rows(block), return_index=True)
                    block = block[np.sort(idx)]
                    for key in pack_rows(block):
                        seen.add(int(key))
                    new_chunks.append(block)
            if not new_chunks:
                break
            frontier = np.concatenate(new_chunks)
            all_rows.append(frontier)
    rows = np.concatenate(all_rows)
    elements = frozenset(tuple(int(v) for v in row) for row in rows)

    transitive = _orbit_of_zero(n, gens) == set(range(n))
    primitive = transitive and _is_primitive(n, gens)
    order = len(elements)
    full = math.factorial(n)
    if order == full:
        contains_alt = True
        symmetric = True
    elif 2 * order == full:
        contains_alt = all(perm_parity(e) == 0 for e in elements)
        symmetric = False
    else:
        contains_alt = False
        symmetric = False
    return PermGroup(n, elements, transitive, primitive, contains_alt, symmetric)


def _orbit_of_zero(n: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def _is_primitive(n: int, gens: list[tuple[int, ...]]) -> bool:
    """No nontrivial block system: the minimal block containing {0, i} is
    all of {0..n-1} for every i (transitivity assumed)."""
    if n == 1:
        return True
    for i in range(1, n):
        if _minimal_block_size(n, gens, i) < n:
            return False
    return True


def _minimal_block_size(n: int, gens: list[tuple[int, ...]], i: int) -> int:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[rb] = ra
        return True

    union(0, i)
    queue = [(0, i)]
    while queue:
        a, b = queue.pop()
        for g in gens:
            ga, gb = g[a], g[b]
            if union(ga, gb):
                queue.append((ga, gb))
    root = find(0)
    return sum(1 for x in range(n) if find(x) == root)
