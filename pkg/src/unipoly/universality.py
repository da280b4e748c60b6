"""Deciding and witnessing d-universality.

f over F_q is d-universal when every degree 1..deg(f) occurs as an
irreducible factor degree of f - t0 for some t0 in F_{q^d}.  A coverage
check lifts f through an embedding into F_{q^d}, sweeps t0, and records
the first witness per degree; an exhaustive sweep that leaves a degree
unwitnessed is a certificate of non-d-universality.

dlp_search runs the same coverage machinery over coprime pairs (h1, h2)
of degree at most 2, profiling h1*X^q + h2 - t0; a fully covered pair
certifies that every degree up to q + deg(h1) is realized, the shape
needed to represent field elements for small-characteristic discrete-log
style computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import BudgetExceeded, EmptyPool, OutOfRange, ZeroInput
from .field import FieldSpec, embed_field, field_create
from .intutil import split_prime_power
from .poly import FactorDegreeProfile, Polynomial, ProfileEntry, poly_gen
from .sweep import ProfileTriples, draw_stream, exhaustive_stream, run_sweep, seeded_draws


class Witness(NamedTuple):
    index: int
    t0: int
    profile: FactorDegreeProfile


class CoverageFold:
    """First witness per target degree, in index order; stops when covered."""

    def __init__(self, ells: Sequence[int],
                 witnesses: dict[int, Witness] | None = None,
                 processed: int = 0):
        self.ells = tuple(ells)
        self.witnesses: dict[int, Witness] = dict(witnesses or {})
        self.processed = processed

    def update(self, index: int, t0: int, profile: ProfileTriples) -> bool:
        self.processed = index + 1
        hit = False
        for ell in self.ells:
            if ell not in self.witnesses and any(t[0] == ell for t in profile):
                entries = tuple(ProfileEntry(*t) for t in profile)
                self.witnesses[ell] = Witness(index, t0, FactorDegreeProfile(entries))
                hit = True
        return hit and len(self.witnesses) == len(self.ells)

    @property
    def covered(self) -> bool:
        return len(self.witnesses) == len(self.ells)

    def scanned(self, total: int) -> int:
        if self.covered:
            return 1 + max(w.index for w in self.witnesses.values())
        return total


@dataclass(frozen=True)
class UniversalityReport:
    """Outcome of one coverage sweep.

    witnesses maps each target degree to its first witness or None.
    certified is True when every degree got a witness (the witnesses are
    checkable certificates) or when the sweep was exhaustive (a gap is
    then a certificate of non-d-universality).
    """
    f: Polynomial
    base: FieldSpec
    ext: FieldSpec
    d: int
    n: int
    ells: tuple[int, ...]
    mode: str
    budget: int | None
    seed: int
    scanned: int
    total_space: int
    witnesses: dict[int, Witness | None]

    @property
    def covered(self) -> bool:
        return all(w is not None for w in self.witnesses.values())

    @property
    def missing(self) -> tuple[int, ...]:
        return tuple(ell for ell in self.ells if self.witnesses[ell] is None)

    @property
    def certified(self) -> bool:
        return self.covered or self.mode == "exhaustive"

    def f_ext(self) -> Polynomial:
        return self.f.lift(embed_field(self.base, self.ext))

    def verify_witnesses(self) -> bool:
        """Recompute every witness profile from scratch and recheck it."""
        shifted = self.f_ext()
        for ell, w in self.witnesses.items():
            if w is None:
                continue
            prof = shifted.shift_constant(self.ext.element(w.t0)).degree_profile()
            if prof != w.profile or not prof.contains_degree(ell):
                return False
        return True


def default_budget(n: int) -> int:
    """Default random-mode draw budget, sized for coupon-collector cover time."""
    return max(64, int(50 * n * math.log(max(n, 2))))


def coverage_check(f: Polynomial, d: int, mode: str = "exhaustive",
                   budget: int | None = None, seed: int = 0,
                   workers: int = 1, ext: FieldSpec | None = None,
                   fold: CoverageFold | None = None,
                   start_index: int = 0) -> UniversalityReport:
    """Sweep t0 over F_{q^d} looking for an irreducible factor of every
    degree 1..deg(f) in f - t0.

    Exhaustive mode walks the whole extension in packed order; random mode
    draws uniformly with replacement from a seeded stream.  Passing a
    partially filled fold with start_index resumes an interrupted sweep.
    """
    if f.is_zero() or f.degree < 1:
        raise ZeroInput("coverage needs a nonconstant polynomial")
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"unknown mode {mode!r}")
    if d < 1:
        raise OutOfRange(f"extension degree must be positive, got {d}")
    base = f.spec
    if ext is None:
        ext = field_create(base.p, base.m * d, seed=0)
    n = f.degree
    ells = tuple(range(1, n + 1))
    f_ext = f.lift(embed_field(base, ext))
    if fold is None:
        fold = CoverageFold(ells)

    if mode == "exhaustive":
        if budget is not None and ext.order > budget:
            raise BudgetExceeded(
                f"exhaustive sweep of {ext.order} elements exceeds budget {budget}")
        total = ext.order
        pairs = exhaustive_stream(ext.order, start_index)
    else:
        if budget is None:
            budget = default_budget(n)
        draws = seeded_draws(_draw_seed(f_ext, seed), ext.order, budget)
        total = len(draws)
        pairs = draw_stream(draws, start_index)

    run_sweep(ext, f_ext.packed, pairs, fold, workers)
    return UniversalityReport(
        f=f, base=base, ext=ext, d=d, n=n, ells=ells, mode=mode,
        budget=budget, seed=seed, scanned=fold.scanned(total),
        total_space=ext.order,
        witnesses={ell: fold.witnesses.get(ell) for ell in ells},
    )


def _draw_seed(f_ext: Polynomial, seed: int) -> str:
    return f"unipoly:sweep:{seed}:{f_ext.canonical()}"


def minimal_universal_d(f: Polynomial, d_max: int, budget_per_d: int,
                        seed: int = 0, workers: int = 1
                        ) -> tuple[int | None, list[UniversalityReport]]:
    """Smallest d in 1..d_max whose coverage sweep witnesses every degree.

    Each level is exhaustive when q^d fits the per-level budget and
    seeded-random otherwise; a returned d is a genuine certificate, while
    None is inconclusive unless every level ran exhaustively.
    """
    if d_max < 1:
        raise OutOfRange(f"d_max must be positive, got {d_max}")
    reports: list[UniversalityReport] = []
    for d in range(1, d_max + 1):
        mode = "exhaustive" if f.spec.order ** d <= budget_per_d else "random"
        rep = coverage_check(f, d, mode=mode, budget=budget_per_d,
                             seed=seed, workers=workers)
        reports.append(rep)
        if rep.covered:
            return d, reports
    return None, reports


@dataclass(frozen=True)
class DlpCandidate:
    """A coprime (h1, h2) pair with the coverage report of h1*X^q + h2."""
    h1: Polynomial
    h2: Polynomial
    report: UniversalityReport

    @property
    def covered_count(self) -> int:
        return sum(1 for w in self.report.witnesses.values() if w is not None)


def dlp_search(q: int, d: int, h1_pool: Sequence[Polynomial],
               h2_pool: Sequence[Polynomial], budget: int | None = None,
               seed: int = 0, workers: int = 1,
               ext: FieldSpec | None = None) -> list[DlpCandidate]:
    """Coverage search over coprime pairs (h1, h2) of degree <= 2 over F_{q^d}.

    Profiles h1*X^q + h2 - t0 with t0 sweeping F_{q^d} itself, so a fully
    covered pair witnesses every degree up to q + deg(h1).  The default
    pair (1, X^2) is always evaluated.  Candidates come back sorted by
    covered degree count, ties broken by canonical text.
    """
    if not h1_pool or not h2_pool:
        raise EmptyPool("h1 and h2 pools must both be nonempty")
    p, a = split_prime_power(q)
    if ext is None:
        ext = field_create(p, a * d, seed=0)
    for h in list(h1_pool) + list(h2_pool):
        if h.spec != ext:
            raise OutOfRange(f"pool polynomial {h} is not over {ext!r}")
        if h.degree > 2:
            raise OutOfRange(f"pool polynomial degree {h.degree} exceeds 2")
    X = poly_gen(ext)
    pairs: list[tuple[Polynomial, Polynomial]] = []
    seen = set()
    for h1 in h1_pool:
        for h2 in h2_pool:
            key = (h1.packed, h2.packed)
            if key in seen:
                continue
            seen.add(key)
            pairs.append((h1, h2))
    default = (Polynomial.from_packed(ext, (1,)), X * X)
    if (default[0].packed, default[1].packed) not in seen:
        pairs.append(default)

    out: list[DlpCandidate] = []
    for h1, h2 in pairs:
        if h1.is_zero():
            continue
        if h1.gcd(h2).degree != 0:
            continue
        f = h1 * X ** q + h2
        mode = "exhaustive" if budget is None or ext.order <= budget else "random"
        rep = coverage_check(f, 1, mode=mode, budget=budget, seed=seed,
                             workers=workers, ext=ext)
        out.append(DlpCandidate(h1, h2, rep))
    out.sort(key=lambda c: (-c.covered_count, c.h1.canonical(), c.h2.canonical()))
    return out
