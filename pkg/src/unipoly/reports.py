"""Versioned structured-text reports, CSV tables, and resume files.

Every renderer is a pure function of its inputs: no timestamps, no
hostnames, no absolute paths.  Together with the deterministic sweep
contract this makes reports byte-identical across repeated runs and
across worker counts.  Files are written atomically (temp file in the
target directory, then rename).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from fractions import Fraction
from typing import Mapping, Sequence

from .constructions import FamilyPoly, TurnwaldVerdict
from .errors import ConfigError
from .monodromy import CycleTypeStats, JordanEvidence
from .perms import CycleType
from .universality import DlpCandidate, UniversalityReport

REPORT_VERSION = "unipoly-report v1"


# -- configuration hashing ----------------------------------------------------

def canonical_config_text(config: Mapping[str, object]) -> str:
    """Sorted key=value lines; the hashed identity of a run.

    Values must render deterministically; only scalars and flat
    sequences are allowed.
    """
    lines = []
    for key in sorted(config):
        value = config[key]
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        lines.append(f"{key}={value}")
    return "\n".join(lines)


def config_hash(config: Mapping[str, object]) -> str:
    return hashlib.sha256(canonical_config_text(config).encode()).hexdigest()


# -- rendering helpers --------------------------------------------------------

def _frac(x: Fraction) -> str:
    return str(x)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _head(command: str, pairs: Sequence[tuple[str, object]]) -> list[str]:
    lines = [REPORT_VERSION, f"command: {command}"]
    lines.extend(f"{k}: {v}" for k, v in pairs)
    return lines


# -- universality -------------------------------------------------------------

UNIVERSALITY_CSV_HEADER = ("ell", "witness_t0", "profile", "scanned")


def universality_lines(rep: UniversalityReport) -> list[str]:
    missing = " ".join(str(ell) for ell in rep.missing) or "-"
    lines = _head("universality", [
        ("field", rep.base.canonical()),
        ("extension", rep.ext.canonical()),
        ("f", rep.f.canonical()),
        ("degree", rep.n),
        ("d", rep.d),
        ("mode", rep.mode),
        ("budget", rep.budget if rep.budget is not None else "none"),
        ("seed", rep.seed),
        ("total_space", rep.total_space),
        ("scanned", rep.scanned),
        ("covered", "yes" if rep.covered else "no"),
        ("certified", "yes" if rep.certified else "no"),
        ("missing", missing),
    ])
    for ell in rep.ells:
        w = rep.witnesses[ell]
        if w is None:
            lines.append(f"record: ell={ell} witness_t0=- scanned_at=- profile=-")
        else:
            lines.append(f"record: ell={ell} witness_t0={w.t0} "
                         f"scanned_at={w.index + 1} profile={w.profile.serialize()}")
    return lines


def universality_csv_rows(rep: UniversalityReport) -> list[tuple[object, ...]]:
    rows: list[tuple[object, ...]] = []
    for ell in rep.ells:
        w = rep.witnesses[ell]
        if w is None:
            rows.append((ell, "", "", rep.scanned))
        else:
            rows.append((ell, w.t0, w.profile.serialize(), w.index + 1))
    return rows


# -- monodromy ----------------------------------------------------------------

MONODROMY_CSV_HEADER = ("cycle_type", "count", "empirical", "predicted",
                        "deviation_units")


def monodromy_lines(stats: CycleTypeStats, evidence: JordanEvidence | None,
                    deviations: Mapping[CycleType, tuple[Fraction, Fraction, float]]
                    ) -> list[str]:
    lines = _head("monodromy", [
        ("field", stats.base.canonical()),
        ("extension", stats.ext.canonical()),
        ("f", stats.f.canonical()),
        ("degree", stats.n),
        ("d", stats.d),
        ("exhaustive", "yes" if stats.exhaustive else "no"),
        ("seed", stats.seed),
        ("total_space", stats.total_space),
        ("samples", stats.samples),
        ("skipped_ramified", stats.skipped_ramified),
        ("types_seen", len(stats.histogram)),
    ])
    if evidence is not None:
        def mark(found):
            if found is None:
                return "no"
            tau, w = found
            return f"yes type=[{tau.serialize()}] t0={w.t0}"
        lines.append(f"jordan: n={evidence.n} r={evidence.r}")
        lines.append(f"jordan: n_cycle {mark(evidence.found_n_cycle)}")
        lines.append(f"jordan: n_minus_1_cycle {mark(evidence.found_n_minus_1_cycle)}")
        lines.append(f"jordan: r_cycle {mark(evidence.found_r_cycle)}")
        lines.append(f"jordan: verdict={evidence.verdict}")
    taus = set(stats.histogram) | set(deviations)
    for tau in sorted(taus, key=lambda t: t.serialize()):
        count = stats.histogram.get(tau, 0)
        if tau in deviations:
            emp, pred, dev = deviations[tau]
            lines.append(f"record: type=[{tau.serialize()}] count={count} "
                         f"empirical={_frac(emp)} predicted={_frac(pred)} "
                         f"deviation_units={dev:.6f}")
        else:
            lines.append(f"record: type=[{tau.serialize()}] count={count}")
    return lines


def monodromy_csv_rows(stats: CycleTypeStats,
                       deviations: Mapping[CycleType, tuple[Fraction, Fraction, float]]
                       ) -> list[tuple[object, ...]]:
    rows: list[tuple[object, ...]] = []
    for tau in sorted(set(stats.histogram) | set(deviations),
                      key=lambda t: t.serialize()):
        count = stats.histogram.get(tau, 0)
        if tau in deviations:
            emp, pred, dev = deviations[tau]
            rows.append((tau.serialize(), count, _frac(emp), _frac(pred), f"{dev:.6f}"))
        else:
            rows.append((tau.serialize(), count, "", "", ""))
    return rows


# -- factor -------------------------------------------------------------------

FACTOR_CSV_HEADER = ("degree", "count", "multiplicity")


def factor_lines(f, profile) -> list[str]:
    lines = _head("factor", [
        ("field", f.spec.canonical()),
        ("f", f.canonical()),
        ("degree", f.degree),
        ("profile", profile.serialize() or "-"),
        ("squarefree", "yes" if profile.is_squarefree() else "no"),
    ])
    for e in profile.entries:
        lines.append(f"record: degree={e.degree} count={e.count} "
                     f"multiplicity={e.multiplicity}")
    return lines


def factor_csv_rows(profile) -> list[tuple[object, ...]]:
    return [(e.degree, e.count, e.multiplicity) for e in profile.entries]


# -- turnwald -----------------------------------------------------------------

TURNWALD_CSV_HEADER = ("check", "outcome")


def turnwald_lines(verdict: TurnwaldVerdict) -> list[str]:
    lines = _head("turnwald", [
        ("field", verdict.g.spec.canonical()),
        ("g", verdict.g.canonical()),
        ("degree", verdict.g.degree),
        ("separable", "yes" if verdict.separable_ok else "no"),
        ("simple_root", "yes" if verdict.simple_root_ok else "no"),
        ("distinct_critical_values",
         "yes" if verdict.distinct_critical_values_ok else "no"),
        ("verdict", verdict.verdict),
    ])
    for line in verdict.evidence:
        lines.append(f"evidence: {line}")
    return lines


def turnwald_csv_rows(verdict: TurnwaldVerdict) -> list[tuple[object, ...]]:
    return [
        ("separable", "yes" if verdict.separable_ok else "no"),
        ("simple_root", "yes" if verdict.simple_root_ok else "no"),
        ("distinct_critical_values",
         "yes" if verdict.distinct_critical_values_ok else "no"),
        ("verdict", verdict.verdict),
    ]


# -- family -------------------------------------------------------------------

FAMILY_CSV_HEADER = ("family", "q", "param_j", "f", "degree", "d_hint",
                     "expected_universal")


def family_lines(fam: FamilyPoly) -> list[str]:
    j = fam.params[0][1] if fam.family == "xqj" else "-"
    lines = _head("family", [
        ("family", fam.family),
        ("q", fam.q),
        ("param_j", j),
        ("field", fam.poly.spec.canonical()),
        ("f", fam.poly.canonical()),
        ("degree", fam.poly.degree),
        ("d_hint", "-" if fam.d_hint is None else fam.d_hint),
        ("expected_universal", "yes" if fam.expected_universal else "no"),
    ])
    for note in fam.notes:
        lines.append(f"note: {note}")
    return lines


def family_csv_rows(fam: FamilyPoly) -> list[tuple[object, ...]]:
    j = fam.params[0][1] if fam.family == "xqj" else ""
    return [(fam.family, fam.q, j, fam.poly.canonical(), fam.poly.degree,
             "" if fam.d_hint is None else fam.d_hint,
             "yes" if fam.expected_universal else "no")]


# -- minimal-d ----------------------------------------------------------------

MINIMAL_D_CSV_HEADER = ("d", "mode", "scanned", "total_space", "covered",
                        "missing")


def minimal_d_lines(d_min: int | None,
                    reports: Sequence[UniversalityReport]) -> list[str]:
    first = reports[0]
    lines = _head("minimal-d", [
        ("field", first.base.canonical()),
        ("f", first.f.canonical()),
        ("degree", first.n),
        ("seed", first.seed),
        ("d_min", d_min if d_min is not None else "none"),
        ("levels", len(reports)),
        ("conclusive", "yes" if d_min is not None or
         all(r.mode == "exhaustive" for r in reports) else "no"),
    ])
    for rep in reports:
        missing = " ".join(str(ell) for ell in rep.missing) or "-"
        lines.append(f"record: d={rep.d} mode={rep.mode} scanned={rep.scanned} "
                     f"total_space={rep.total_space} "
                     f"covered={'yes' if rep.covered else 'no'} missing={missing}")
    return lines


def minimal_d_csv_rows(reports: Sequence[UniversalityReport]
                       ) -> list[tuple[object, ...]]:
    rows: list[tuple[object, ...]] = []
    for rep in reports:
        missing = " ".join(str(ell) for ell in rep.missing)
        rows.append((rep.d, rep.mode, rep.scanned, rep.total_space,
                     "yes" if rep.covered else "no", missing))
    return rows


# -- dlp-search ---------------------------------------------------------------

DLP_CSV_HEADER = ("h1", "h2", "target_degree", "covered_count", "degrees",
                  "covered", "scanned")


def dlp_lines(q: int, d: int, candidates: Sequence[DlpCandidate]) -> list[str]:
    pairs: list[tuple[str, object]] = [("q", q), ("d", d),
                                       ("candidates", len(candidates))]
    if candidates:
        pairs.insert(2, ("extension", candidates[0].report.ext.canonical()))
    lines = _head("dlp-search", pairs)
    for cand in candidates:
        rep = cand.report
        got = ",".join(str(ell) for ell in sorted(rep.witnesses)) or "-"
        lines.append(
            f"record: h1={cand.h1.canonical()} h2={cand.h2.canonical()} "
            f"target_degree={rep.n} covered_count={cand.covered_count} "
            f"degrees={got} covered={'yes' if rep.covered else 'no'} "
            f"scanned={rep.scanned}")
    return lines


def dlp_csv_rows(candidates: Sequence[DlpCandidate]) -> list[tuple[object, ...]]:
    rows: list[tuple[object, ...]] = []
    for cand in candidates:
        rep = cand.report
        got = ",".join(str(ell) for ell in sorted(rep.witnesses)) or "-"
        rows.append((cand.h1.canonical(), cand.h2.canonical(), rep.n,
                     cand.covered_count, got,
                     "yes" if rep.covered else "no", rep.scanned))
    return rows


# -- reproduce-401 ------------------------------------------------------------

REPRODUCE_CSV_HEADER = ("q", "f", "d", "mode", "covered", "scanned",
                        "witnesses_verified")


def reproduce_lines(max_prime: int,
                    results: Sequence[tuple[int, UniversalityReport, bool]]
                    ) -> list[str]:
    covered_all = all(rep.covered for _, rep, _ in results)
    lines = _head("reproduce-401", [
        ("max_prime", max_prime),
        ("d", 3),
        ("primes", len(results)),
        ("all_covered", "yes" if covered_all else "no"),
    ])
    for q, rep, verified in results:
        lines.append(
            f"record: q={q} f={rep.f.canonical()} mode={rep.mode} "
            f"covered={'yes' if rep.covered else 'no'} scanned={rep.scanned} "
            f"witnesses_verified={'yes' if verified else 'no'}")
    return lines


def reproduce_csv_rows(results: Sequence[tuple[int, UniversalityReport, bool]]
                       ) -> list[tuple[object, ...]]:
    return [(q, rep.f.canonical(), rep.d, rep.mode,
             "yes" if rep.covered else "no", rep.scanned,
             "yes" if verified else "no")
            for q, rep, verified in results]


# -- file output --------------------------------------------------------------

def _atomic_write(path: str, data: str) -> None:
    directory = os.path.dirname(path) or "."
    tmp = os.path.join(directory, f".{os.path.basename(path)}.tmp")
    with open(tmp, "w", newline="") as fh:
        fh.write(data)
    os.replace(tmp, path)


def write_report(out_dir: str, stem: str, lines: Sequence[str],
                 csv_header: Sequence[str],
                 csv_rows: Sequence[Sequence[object]]) -> tuple[str, str]:
    """Write stem.report.txt and stem.csv; returns the two paths."""
    os.makedirs(out_dir, exist_ok=True)
    report_path = os.path.join(out_dir, f"{stem}.report.txt")
    csv_path = os.path.join(out_dir, f"{stem}.csv")
    _atomic_write(report_path, "\n".join(lines) + "\n")
    _atomic_write(csv_path, _csv_text(csv_header, csv_rows))
    return report_path, csv_path


# -- resume files -------------------------------------------------------------

RESUME_VERSION = 1


def write_resume(path: str, config: Mapping[str, object], kind: str,
                 next_index: int, state: Mapping[str, object]) -> None:
    doc = {
        "version": RESUME_VERSION,
        "kind": kind,
        "config_hash": config_hash(config),
        "config": dict(config),
        "next_index": next_index,
        "state": dict(state),
    }
    _atomic_write(path, json.dumps(doc, indent=2, sort_keys=True) + "\n")


def load_resume(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"resume file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"resume file {path} is not valid JSON: {exc}")
    for key in ("version", "kind", "config_hash", "config", "next_index", "state"):
        if key not in doc:
            raise ConfigError(f"resume file {path} lacks field {key!r}")
    if doc["version"] != RESUME_VERSION:
        raise ConfigError(
            f"resume file version {doc['version']} unsupported (want {RESUME_VERSION})")
    return doc
