"""Frobenius cycle-type statistics as empirical monodromy evidence.

For separable f and unramified t0 (f - t0 squarefree), the multiset of
irreducible factor degrees of f - t0 is the cycle type of the Frobenius
element at t0 acting on the roots.  Sampling those types and comparing
their frequencies with the symmetric-group densities gives checkable
evidence about the monodromy group: an n-cycle, an (n-1)-cycle, and a
cycle of prime length r with n/2 < r < n-2 together force a primitive
group containing the alternating group (the Jordan-criterion witnesses),
and exhaustive frequencies should match the S_n densities to within the
square-root error of the density theorem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    BadPartition,
    InseparableInput,
    NoPrimeInRange,
    NonExhaustiveStats,
    OutOfRange,
    ZeroInput,
)
from .field import FieldSpec, embed_field, field_create
from .intutil import is_prime
from .perms import CycleType, cycle_type_probability
from .poly import FactorDegreeProfile, Polynomial, ProfileEntry
from .sweep import ProfileTriples, draw_stream, exhaustive_stream, run_sweep, seeded_draws


class TypeWitness(NamedTuple):
    index: int
    t0: int


class TypeHistogramFold:
    """Counts cycle types of squarefree shifts; ramified shifts are skipped."""

    def __init__(self, histogram: dict[CycleType, int] | None = None,
                 witnesses: dict[CycleType, TypeWitness] | None = None,
                 skipped_ramified: int = 0, processed: int = 0):
        self.histogram: dict[CycleType, int] = dict(histogram or {})
        self.witnesses: dict[CycleType, TypeWitness] = dict(witnesses or {})
        self.skipped_ramified = skipped_ramified
        self.processed = processed

    def update(self, index: int, t0: int, profile: ProfileTriples) -> bool:
        self.processed = index + 1
        if any(t[2] != 1 for t in profile):
            self.skipped_ramified += 1
            return False
        tau = CycleType({d: c for d, c, _ in profile})
        self.histogram[tau] = self.histogram.get(tau, 0) + 1
        if tau not in self.witnesses:
            self.witnesses[tau] = TypeWitness(index, t0)
        return False


@dataclass(frozen=True)
class CycleTypeStats:
    """Histogram of Frobenius cycle types over a t0 sweep of F_{q^d}."""
    f: Polynomial
    base: FieldSpec
    ext: FieldSpec
    d: int
    n: int
    samples: int
    skipped_ramified: int
    histogram: dict[CycleType, int]
    witnesses: dict[CycleType, TypeWitness]
    exhaustive: bool
    seed: int

    @property
    def total_space(self) -> int:
        return self.ext.order

    def count(self, tau: CycleType) -> int:
        return self.histogram.get(tau, 0)

    def witness_with_part(self, length: int) -> tuple[CycleType, TypeWitness] | None:
        """First-seen witness whose type contains a cycle of this length."""
        best = None
        for tau, w in self.witnesses.items():
            if tau.contains_length(length) and (best is None or w.index < best[1].index):
                best = (tau, w)
        return best


def sample_cycle_types(f: Polynomial, d: int, count: int, seed: int = 0,
                       workers: int = 1, ext: FieldSpec | None = None,
                       fold: TypeHistogramFold | None = None,
                       start_index: int = 0) -> CycleTypeStats:
    """Cycle types of f - t0 over unramified t0 in F_{q^d}.

    Enumerates the whole extension when its order is within count,
    otherwise draws count seeded samples with replacement.  t0 values
    where f - t0 is not squarefree are counted as skipped_ramified and
    excluded from the histogram.
    """
    if f.is_zero() or f.degree < 1:
        raise ZeroInput("cycle-type sampling needs a nonconstant polynomial")
    if f.derivative().is_zero():
        raise InseparableInput(
            f"{f} has zero derivative; every shift is ramified")
    if count < 1:
        raise OutOfRange(f"sample count must be positive, got {count}")
    if d < 1:
        raise OutOfRange(f"extension degree must be positive, got {d}")
    base = f.spec
    if ext is None:
        ext = field_create(base.p, base.m * d, seed=0)
    f_ext = f.lift(embed_field(base, ext))
    exhaustive = ext.order <= count
    if fold is None:
        fold = TypeHistogramFold()
    if exhaustive:
        pairs = exhaustive_stream(ext.order, start_index)
        total = ext.order
    else:
        draws = seeded_draws(f"unipoly:types:{seed}:{f_ext.canonical()}", ext.order, count)
        pairs = draw_stream(draws, start_index)
        total = count
    run_sweep(ext, f_ext.packed, pairs, fold, workers)
    samples = total - fold.skipped_ramified
    return CycleTypeStats(
        f=f, base=base, ext=ext, d=d, n=f.degree, samples=samples,
        skipped_ramified=fold.skipped_ramified, histogram=dict(fold.histogram),
        witnesses=dict(fold.witnesses), exhaustive=exhaustive, seed=seed)


def bertrand_prime(n: int) -> int:
    """Smallest prime r with floor(n/2)+1 <= r <= n-3; defined for n >= 8."""
    lo = n // 2 + 1
    hi = n - 3
    for r in range(lo, hi + 1):
        if is_prime(r):
            return r
    raise NoPrimeInRange(f"no prime in [{lo}, {hi}] (need n >= 8, got n={n})")


@dataclass(frozen=True)
class JordanEvidence:
    """Witness triple for the symmetric-group criterion at degree n.

    An n-cycle shows transitivity, an (n-1)-cycle adds 2-transitivity
    hence primitivity, and a cycle of prime length r with n/2 < r < n-2
    completes the hypotheses forcing the group to contain A_n.  The
    verdict is evidence, not proof: it certifies the witnesses exist,
    not the group identity.
    """
    n: int
    r: int
    found_n_cycle: tuple[CycleType, TypeWitness] | None
    found_n_minus_1_cycle: tuple[CycleType, TypeWitness] | None
    found_r_cycle: tuple[CycleType, TypeWitness] | None
    verdict: str  # "consistent_with_Sn" | "incomplete"


def jordan_evidence(stats: CycleTypeStats) -> JordanEvidence:
    """Scan sampled types for the three Jordan-criterion witnesses.

    The n-cycle witness is the type {n:1}, the (n-1)-cycle witness is
    {n-1:1, 1:1}, and any type containing a part of prime length
    r = bertrand_prime(n) counts as an r-cycle witness (a power of such
    an element is an r-cycle).
    """
    n = stats.n
    r = bertrand_prime(n)
    w_n = None
    tau_n = CycleType({n: 1})
    if tau_n in stats.witnesses:
        w_n = (tau_n, stats.witnesses[tau_n])
    w_n1 = None
    tau_n1 = CycleType({n - 1: 1, 1: 1})
    if tau_n1 in stats.witnesses:
        w_n1 = (tau_n1, stats.witnesses[tau_n1])
    w_r = stats.witness_with_part(r)
    verdict = "consistent_with_Sn" if (w_n and w_n1 and w_r) else "incomplete"
    return JordanEvidence(n=n, r=r, found_n_cycle=w_n,
                          found_n_minus_1_cycle=w_n1, found_r_cycle=w_r,
                          verdict=verdict)


def chebotarev_deviation(stats: CycleTypeStats, tau: CycleType
                         ) -> tuple[Fraction, Fraction, float]:
    """(empirical, predicted, deviation_units) for one cycle type.

    empirical is the exhaustive frequency count/q^d; predicted is the
    S_n density of tau; deviation_units measures |empirical - predicted|
    in units of q^(d/2), the natural error scale of the density theorem.
    """
    if not stats.exhaustive:
        raise NonExhaustiveStats("deviation is defined for exhaustive sweeps only")
    if tau.n != stats.n:
        raise BadPartition(f"{tau} does not partition {stats.n}")
    space = stats.total_space
    empirical = Fraction(stats.count(tau), space)
    predicted = cycle_type_probability(stats.n, tau)
    deviation = float(abs(empirical - predicted)) * math.sqrt(space)
    return empirical, predicted, deviation


def profile_cycle_type(profile: FactorDegreeProfile) -> CycleType | None:
    """Cycle type of a squarefree profile; None when any multiplicity > 1."""
    if not profile.is_squarefree():
        return None
    counts: dict[int, int] = {}
    for e in profile.entries:
        counts[e.degree] = counts.get(e.degree, 0) + e.count
    return CycleType(counts)
