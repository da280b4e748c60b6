"""Command-line surface tying fields, sweeps, statistics, and reports together.

Every run is identified by a config hash (sha256 of the canonical
key=value text, excluding workers / output paths / pause flags, which
cannot change results).  Reports land in --out-dir as
<command>-<hash12>.report.txt plus a CSV twin; interrupted sweeps leave
a .resume.json continued by the resume subcommand.

Exit codes: 0 completed, 1 error, 2 negative certificate (failed
Turnwald check, exhaustively uncovered degree, uncovered reproduction),
3 paused by --stop-after.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Mapping, Sequence

from . import reports
from .constructions import family_xqj, turnwald_check, xq_plus_x2
from .errors import ConfigError, ConfigHashMismatch, UnipolyError
from .field import FieldSpec, field_create, field_from_canonical
from .intutil import primes_in, split_prime_power
from .monodromy import (
    CycleTypeStats,
    TypeHistogramFold,
    TypeWitness,
    chebotarev_deviation,
    jordan_evidence,
    sample_cycle_types,
)
from .parse import parse_poly
from .perms import CycleType
from .poly import FactorDegreeProfile, Polynomial, poly_gen, poly_parse_canonical
from .universality import (
    CoverageFold,
    Witness,
    coverage_check,
    default_budget,
    dlp_search,
    minimal_universal_d,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2
EXIT_PAUSED = 3


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems with exit code 1, not 2."""

    def error(self, message):
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _out_dir(args) -> str:
    if args.out_dir:
        return args.out_dir
    return os.environ.get("UNIPOLY_OUT_DIR", ".")


def _field(args) -> FieldSpec:
    if args.p is None:
        raise ConfigError("field: --p is required")
    return field_create(args.p, args.a, seed=0)


def _poly_arg(args, spec: FieldSpec) -> Polynomial:
    sources = [s for s in (args.poly, args.family) if s]
    if len(sources) != 1:
        raise ConfigError("poly: give exactly one of --poly or --family")
    if args.poly:
        return parse_poly(args.poly, spec)
    return _family(args, spec).poly


def _family(args, spec: FieldSpec):
    if args.family == "xqj":
        if args.j is None:
            raise ConfigError("family xqj: --j is required")
        return family_xqj(spec.order, args.j, field=spec)
    if args.family == "xq2":
        return xq_plus_x2(spec.order, field=spec)
    raise ConfigError(f"family: unknown family {args.family!r}")


def _stem(command: str, config: Mapping[str, object]) -> str:
    return f"{command}-{reports.config_hash(config)[:12]}"


def _emit(out_dir: str, stem: str, lines: Sequence[str],
          header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    report_path, csv_path = reports.write_report(out_dir, stem, lines, header, rows)
    print(f"report: {report_path}")
    print(f"csv: {csv_path}")


# -- pause/resume plumbing ------------------------------------------------------

class _PauseFold:
    """Wraps a sweep fold; stops the sweep once `limit` shifts are processed.

    Distinguishes the inner fold finishing (complete) from the pause
    limit firing (paused).
    """

    def __init__(self, inner, limit: int | None):
        self.inner = inner
        self.limit = limit
        self.paused = False
        self.complete = False

    def update(self, index: int, t0: int, profile) -> bool:
        if self.inner.update(index, t0, profile):
            self.complete = True
            return True
        if self.limit is not None and self.inner.processed >= self.limit:
            self.paused = True
            return True
        return False

    def __getattr__(self, name):
        # report builders read fold state (witnesses, scanned, ...) through us
        return getattr(self.inner, name)


def _coverage_state(fold: CoverageFold) -> dict:
    witnesses = {
        str(ell): [w.index, w.t0, w.profile.serialize()]
        for ell, w in fold.witnesses.items()
    }
    return {"witnesses": witnesses, "processed": fold.processed}


def _coverage_fold_from_state(ells: Sequence[int], state: Mapping) -> CoverageFold:
    witnesses = {}
    for key, (index, t0, prof) in state["witnesses"].items():
        witnesses[int(key)] = Witness(index, t0, FactorDegreeProfile.parse(prof))
    return CoverageFold(ells, witnesses=witnesses, processed=state["processed"])


def _histogram_state(fold: TypeHistogramFold) -> dict:
    histogram = {tau.serialize(): c for tau, c in fold.histogram.items()}
    witnesses = {tau.serialize(): [w.index, w.t0] for tau, w in fold.witnesses.items()}
    return {
        "histogram": histogram,
        "witnesses": witnesses,
        "skipped_ramified": fold.skipped_ramified,
        "processed": fold.processed,
    }


def _histogram_fold_from_state(state: Mapping) -> TypeHistogramFold:
    histogram = {CycleType.parse(k): c for k, c in state["histogram"].items()}
    witnesses = {CycleType.parse(k): TypeWitness(*v)
                 for k, v in state["witnesses"].items()}
    return TypeHistogramFold(histogram=histogram, witnesses=witnesses,
                             skipped_ramified=state["skipped_ramified"],
                             processed=state["processed"])


# -- universality -----------------------------------------------------------------

def _universality_config(base: FieldSpec, f: Polynomial, d: int, mode: str,
                         budget: int | None, seed: int) -> dict:
    return {
        "command": "universality",
        "field": base.canonical(),
        "f": f.canonical(),
        "d": d,
        "mode": mode,
        "budget": "none" if budget is None else budget,
        "seed": seed,
    }


def _run_universality_sweep(config: Mapping, out_dir: str, workers: int,
                            stop_after: int | None, fold: CoverageFold | None,
                            start_index: int) -> int:
    base = field_from_canonical(config["field"])
    f = poly_parse_canonical(config["f"], base)
    d = int(config["d"])
    mode = str(config["mode"])
    budget = None if config["budget"] == "none" else int(config["budget"])
    seed = int(config["seed"])
    stem = _stem("universality", config)

    if fold is None:
        fold = CoverageFold(range(1, f.degree + 1))
    pause = _PauseFold(fold, stop_after)
    rep = coverage_check(f, d, mode=mode, budget=budget, seed=seed,
                         workers=workers, fold=pause, start_index=start_index)
    resume_path = os.path.join(out_dir, f"{stem}.resume.json")
    if pause.paused:
        reports.write_resume(resume_path, config, "universality",
                             fold.processed, _coverage_state(fold))
        print(f"paused after {fold.processed} shifts; resume file: {resume_path}")
        return EXIT_PAUSED
    _emit(out_dir, stem, reports.universality_lines(rep),
          reports.UNIVERSALITY_CSV_HEADER, reports.universality_csv_rows(rep))
    if stop_after is not None or start_index > 0:
        # run was pausable: leave a completed-marker resume file behind
        reports.write_resume(resume_path, config, "universality",
                             fold.processed, _coverage_state(fold))
    if rep.covered:
        print(f"covered: all degrees 1..{rep.n} witnessed")
        return EXIT_OK
    missing = " ".join(str(ell) for ell in rep.missing)
    if rep.mode == "exhaustive":
        print(f"certificate: degrees {{{missing}}} have no witness in the "
              f"whole extension")
        return EXIT_NEGATIVE
    print(f"inconclusive: degrees {{{missing}}} not witnessed within budget")
    return EXIT_OK


def cmd_universality(args) -> int:
    base = _field(args)
    f = _poly_arg(args, base)
    if args.d is None:
        raise ConfigError("universality: --d is required")
    mode = args.mode
    budget = args.budget
    if mode == "random" and budget is None:
        budget = default_budget(f.degree)
    config = _universality_config(base, f, args.d, mode, budget, args.seed)
    return _run_universality_sweep(config, _out_dir(args), args.workers,
                                   args.stop_after, None, 0)


# -- monodromy ----------------------------------------------------------------

def _monodromy_config(base: FieldSpec, f: Polynomial, d: int, count: int,
                      seed: int, tau: str | None) -> dict:
    return {
        "command": "monodromy",
        "field": base.canonical(),
        "f": f.canonical(),
        "d": d,
        "count": count,
        "seed": seed,
        "tau": tau or "none",
    }


def _run_monodromy_sweep(config: Mapping, out_dir: str, workers: int,
                         stop_after: int | None, fold: TypeHistogramFold | None,
                         start_index: int) -> int:
    base = field_from_canonical(config["field"])
    f = poly_parse_canonical(config["f"], base)
    d = int(config["d"])
    count = int(config["count"])
    seed = int(config["seed"])
    tau_text = None if config["tau"] == "none" else str(config["tau"])
    stem = _stem("monodromy", config)

    if fold is None:
        fold = TypeHistogramFold()
    pause = _PauseFold(fold, stop_after)
    stats = sample_cycle_types(f, d, count, seed=seed, workers=workers,
                               fold=pause, start_index=start_index)
    resume_path = os.path.join(out_dir, f"{stem}.resume.json")
    if pause.paused:
        reports.write_resume(resume_path, config, "monodromy",
                             fold.processed, _histogram_state(fold))
        print(f"paused after {fold.processed} shifts; resume file: {resume_path}")
        return EXIT_PAUSED

    deviations = {}
    if stats.exhaustive:
        taus = set(stats.histogram)
        if tau_text:
            taus.add(CycleType.parse(tau_text))
        for tau in taus:
            deviations[tau] = chebotarev_deviation(stats, tau)
    evidence = jordan_evidence(stats) if stats.n >= 8 else None
    _emit(out_dir, stem, reports.monodromy_lines(stats, evidence, deviations),
          reports.MONODROMY_CSV_HEADER,
          reports.monodromy_csv_rows(stats, deviations))
    if stop_after is not None or start_index > 0:
        reports.write_resume(resume_path, config, "monodromy",
                             fold.processed, _histogram_state(fold))
    if evidence is not None:
        print(f"jordan verdict: {evidence.verdict}")
    print(f"types seen: {len(stats.histogram)}; "
          f"skipped ramified: {stats.skipped_ramified}")
    return EXIT_OK


def cmd_monodromy(args) -> int:
    base = _field(args)
    f = _poly_arg(args, base)
    if args.d is None:
        raise ConfigError("monodromy: --d is required")
    count = args.budget if args.budget is not None else 2000
    config = _monodromy_config(base, f, args.d, count, args.seed, args.tau)
    return _run_monodromy_sweep(config, _out_dir(args), args.workers,
                                args.stop_after, None, 0)


# -- resume ---------------------------------------------------------------------

def cmd_resume(args) -> int:
    doc = reports.load_resume(args.path)
    config = doc["config"]
    if reports.config_hash(config) != doc["config_hash"]:
        raise ConfigHashMismatch(
            f"resume file {args.path}: config does not match its stored hash")
    kind = doc["kind"]
    next_index = int(doc["next_index"])
    out_dir = _out_dir(args)

    if kind == "universality":
        base = field_from_canonical(config["field"])
        f = poly_parse_canonical(config["f"], base)
        total = (base.order ** int(config["d"])
                 if config["mode"] == "exhaustive" else int(config["budget"]))
        fold = _coverage_fold_from_state(range(1, f.degree + 1), doc["state"])
        if fold.covered or next_index >= total:
            print(f"already complete ({next_index} shifts); nothing to resume")
            return EXIT_OK
        return _run_universality_sweep(config, out_dir, args.workers,
                                       args.stop_after, fold, next_index)
    if kind == "monodromy":
        base = field_from_canonical(config["field"])
        total = min(base.order ** int(config["d"]), int(config["count"]))
        if next_index >= total:
            print(f"already complete ({next_index} shifts); nothing to resume")
            return EXIT_OK
        fold = _histogram_fold_from_state(doc["state"])
        return _run_monodromy_sweep(config, out_dir, args.workers,
                                    args.stop_after, fold, next_index)
    raise ConfigError(f"resume file {args.path}: unknown kind {kind!r}")


# -- remaining commands ---------------------------------------------------------

def cmd_factor(args) -> int:
    base = _field(args)
    f = _poly_arg(args, base)
    profile = f.degree_profile()
    config = {"command": "factor", "field": base.canonical(), "f": f.canonical()}
    _emit(_out_dir(args), _stem("factor", config),
          reports.factor_lines(f, profile),
          reports.FACTOR_CSV_HEADER, reports.factor_csv_rows(profile))
    print(f"profile: {profile.serialize() or '-'}")
    return EXIT_OK


def cmd_minimal_d(args) -> int:
    base = _field(args)
    f = _poly_arg(args, base)
    if args.d_max is None:
        raise ConfigError("minimal-d: --d-max is required")
    budget = args.budget if args.budget is not None else 4096
    config = {
        "command": "minimal-d",
        "field": base.canonical(),
        "f": f.canonical(),
        "d_max": args.d_max,
        "budget_per_d": budget,
        "seed": args.seed,
    }
    d_min, reps = minimal_universal_d(f, args.d_max, budget, seed=args.seed,
                                      workers=args.workers)
    _emit(_out_dir(args), _stem("minimal-d", config),
          reports.minimal_d_lines(d_min, reps),
          reports.MINIMAL_D_CSV_HEADER, reports.minimal_d_csv_rows(reps))
    if d_min is not None:
        print(f"d_min: {d_min}")
        return EXIT_OK
    if all(r.mode == "exhaustive" for r in reps):
        print(f"certificate: not universal for any d <= {args.d_max}")
        return EXIT_NEGATIVE
    print(f"inconclusive up to d_max={args.d_max}")
    return EXIT_OK


def cmd_turnwald(args) -> int:
    base = _field(args)
    g = _poly_arg(args, base)
    verdict = turnwald_check(g)
    config = {"command": "turnwald", "field": base.canonical(), "g": g.canonical()}
    _emit(_out_dir(args), _stem("turnwald", config),
          reports.turnwald_lines(verdict),
          reports.TURNWALD_CSV_HEADER, reports.turnwald_csv_rows(verdict))
    print(f"verdict: {verdict.verdict}")
    return EXIT_NEGATIVE if verdict.verdict == "fail" else EXIT_OK


def cmd_family(args) -> int:
    base = _field(args)
    if not args.family:
        raise ConfigError("family: --family is required")
    fam = _family(args, base)
    config = {
        "command": "family",
        "family": fam.family,
        "q": fam.q,
    }
    for name, value in fam.params:
        config[f"param_{name}"] = value
    _emit(_out_dir(args), _stem("family", config),
          reports.family_lines(fam),
          reports.FAMILY_CSV_HEADER, reports.family_csv_rows(fam))
    print(f"f: {fam.poly.canonical()} (d_hint={fam.d_hint})")
    return EXIT_OK


def cmd_dlp_search(args) -> int:
    if args.q is None:
        raise ConfigError("dlp-search: --q is required")
    if args.d is None:
        raise ConfigError("dlp-search: --d is required")
    try:
        p, a = split_prime_power(args.q)
    except ValueError as exc:
        raise ConfigError(f"dlp-search: {exc}")
    ext = field_create(p, a * args.d, seed=0)
    h1_pool = [parse_poly(t, ext) for t in args.h1.split(",")]
    h2_pool = [parse_poly(t, ext) for t in args.h2.split(",")]
    config = {
        "command": "dlp-search",
        "q": args.q,
        "d": args.d,
        "h1_pool": sorted(h.canonical() for h in h1_pool),
        "h2_pool": sorted(h.canonical() for h in h2_pool),
        "budget": "none" if args.budget is None else args.budget,
        "seed": args.seed,
    }
    candidates = dlp_search(args.q, args.d, h1_pool, h2_pool,
                            budget=args.budget, seed=args.seed,
                            workers=args.workers, ext=ext)
    _emit(_out_dir(args), _stem("dlp-search", config),
          reports.dlp_lines(args.q, args.d, candidates),
          reports.DLP_CSV_HEADER, reports.dlp_csv_rows(candidates))
    if candidates:
        best = candidates[0]
        print(f"best pair: h1={best.h1.canonical()} h2={best.h2.canonical()} "
              f"covered {best.covered_count}/{len(best.report.ells)}")
    else:
        print("no coprime pairs in the pools")
    return EXIT_OK


def cmd_reproduce_401(args) -> int:
    max_prime = args.max_prime
    if max_prime < 3:
        raise ConfigError(f"reproduce-401: --max-prime must be >= 3, got {max_prime}")
    mode = "exhaustive" if args.exhaustive else "random"
    config = {
        "command": "reproduce-401",
        "max_prime": max_prime,
        "mode": mode,
        "budget": "default" if args.budget is None else args.budget,
        "seed": args.seed,
    }
    results = []
    for q in primes_in(3, max_prime):
        base = field_create(q, 1, seed=0)
        X = poly_gen(base)
        f = X ** (q + 2) - 2 * X
        budget = args.budget
        if mode == "random" and budget is None:
            budget = default_budget(f.degree)
        rep = coverage_check(f, 3, mode=mode, budget=budget, seed=args.seed,
                             workers=args.workers)
        verified = rep.verify_witnesses()
        results.append((q, rep, verified))
        status = "covered" if rep.covered else "NOT COVERED"
        print(f"q={q}: {status}, scanned {rep.scanned}, "
              f"verified={'yes' if verified else 'no'}")
    _emit(_out_dir(args), _stem("reproduce-401", config),
          reports.reproduce_lines(max_prime, results),
          reports.REPRODUCE_CSV_HEADER, reports.reproduce_csv_rows(results))
    uncovered = [q for q, rep, _ in results if not rep.covered]
    unverified = [q for q, _, v in results if not v]
    if uncovered or unverified:
        print(f"reproduction failed: uncovered {uncovered}, "
              f"unverified {unverified}")
        return EXIT_NEGATIVE
    print(f"all {len(results)} primes covered and verified")
    return EXIT_OK


# -- argument wiring --------------------------------------------------------------

def _add_field_args(sp):
    sp.add_argument("--p", type=int, default=None, help="field characteristic")
    sp.add_argument("--a", type=int, default=1,
                    help="base field is GF(p^a) (default 1)")


def _add_poly_args(sp):
    sp.add_argument("--poly", default=None,
                    help="polynomial expression in X (and u for extensions)")
    sp.add_argument("--family", default=None, choices=("xqj", "xq2"),
                    help="named family instead of --poly")
    sp.add_argument("--j", type=int, default=None, help="parameter for family xqj")


def _add_run_args(sp, stoppable: bool = False):
    sp.add_argument("--seed", type=int, default=0, help="sweep seed (default 0)")
    sp.add_argument("--budget", type=int, default=None, help="sample budget")
    sp.add_argument("--workers", type=int, default=1,
                    help="parallel sweep processes (does not change results)")
    sp.add_argument("--out-dir", default=None,
                    help="report directory (default $UNIPOLY_OUT_DIR or .)")
    if stoppable:
        sp.add_argument("--stop-after", type=int, default=None,
                        help="pause after this many shifts and write a resume file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unipoly",
                     description="universality, monodromy statistics, and "
                                 "critical-value checks for polynomials over "
                                 "finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("factor", help="degree profile of one polynomial")
    _add_field_args(sp)
    _add_poly_args(sp)
    _add_run_args(sp)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("universality", help="witness every degree 1..deg(f) in f - t0")
    _add_field_args(sp)
    _add_poly_args(sp)
    sp.add_argument("--d", type=int, default=None, help="extension degree for t0")
    sp.add_argument("--mode", default="exhaustive", choices=("exhaustive", "random"))
    _add_run_args(sp, stoppable=True)
    sp.set_defaults(func=cmd_universality)

    sp = sub.add_parser("minimal-d", help="smallest universal extension degree")
    _add_field_args(sp)
    _add_poly_args(sp)
    sp.add_argument("--d-max", type=int, default=None)
    _add_run_args(sp)
    sp.set_defaults(func=cmd_minimal_d)

    sp = sub.add_parser("monodromy", help="Frobenius cycle-type statistics")
    _add_field_args(sp)
    _add_poly_args(sp)
    sp.add_argument("--d", type=int, default=None, help="extension degree for t0")
    sp.add_argument("--tau", default=None,
                    help="cycle type for deviation, e.g. \"7^1\"")
    _add_run_args(sp, stoppable=True)
    sp.set_defaults(func=cmd_monodromy)

    sp = sub.add_parser("turnwald", help="critical-value criterion for Gal = S_n")
    _add_field_args(sp)
    _add_poly_args(sp)
    _add_run_args(sp)
    sp.set_defaults(func=cmd_turnwald)

    sp = sub.add_parser("family", help="construct a named polynomial family member")
    _add_field_args(sp)
    _add_poly_args(sp)
    _add_run_args(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("dlp-search",
                        help="coverage search over coprime (h1, h2) pairs")
    sp.add_argument("--q", type=int, default=None, help="base prime power")
    sp.add_argument("--d", type=int, default=None, help="extension degree")
    sp.add_argument("--h1", default="1", help="comma-separated h1 pool expressions")
    sp.add_argument("--h2", default="X^2", help="comma-separated h2 pool expressions")
    _add_run_args(sp)
    sp.set_defaults(func=cmd_dlp_search)

    sp = sub.add_parser("reproduce-401",
                        help="3-universality of X^(q+2) - 2X for odd primes q")
    sp.add_argument("--max-prime", type=int, default=23)
    sp.add_argument("--exhaustive", action="store_true",
                    help="sweep all of F_(q^3) instead of seeded draws")
    _add_run_args(sp)
    sp.set_defaults(func=cmd_reproduce_401)

    sp = sub.add_parser("resume", help="continue an interrupted sweep")
    sp.add_argument("path", help="resume file written by a paused run")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out-dir", default=None)
    sp.add_argument("--stop-after", type=int, default=None)
    sp.set_defaults(func=cmd_resume)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnipolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
