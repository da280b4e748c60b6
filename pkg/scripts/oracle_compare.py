"""Compare library shift-sweep histograms against the table-field oracle."""

import sys
import time

sys.path.insert(0, "src")
sys.path.insert(0, "tests")

from oracle_extfactor import TableField, sweep_profiles

from unipoly.field import field_create
from unipoly.poly import poly_gen
from unipoly.monodromy import sample_cycle_types


def lib_hist(p, a, build, d):
    F = field_create(p, a)
    f = build(poly_gen(F))
    t0 = time.time()
    st = sample_cycle_types(f, d, 10 ** 7)
    dt = time.time() - t0
    assert st.exhaustive
    return {ct.serialize(): c for ct, c in st.histogram.items()}, st.skipped_ramified, dt


def oracle_hist(p, am, fc):
    t0 = time.time()
    F = TableField(p, am)
    t1 = time.time()
    h, sk, _ = sweep_profiles(F, [c % p for c in fc])
    t2 = time.time()
    return h, sk, t1 - t0, t2 - t1


def run_case(label, p, a, build, d, fc):
    mine, msk, lt = lib_hist(p, a, build, d)
    orc, osk, bt, st = oracle_hist(p, a * d, fc)
    ok = mine == orc and msk == osk
    word = "MATCH" if ok else "MISMATCH"
    print(f"{label} d={d}: {word} (skipped {msk}/{osk}; lib {lt:.1f}s, "
          f"oracle build {bt:.1f}s sweep {st:.1f}s)", flush=True)
    if not ok:
        for k in sorted(set(mine) | set(orc)):
            x, y = mine.get(k, 0), orc.get(k, 0)
            if x != y:
                print(f"   {k}: lib {x} oracle {y}", flush=True)
    return ok


def main():
    allok = True
    f7 = [0, 0, 1, 0, 0, 0, 0, 1]  # X^7 + X^2
    for d in (2, 3, 4):
        allok &= run_case("F7 X^7+X^2", 7, 1, lambda X: X ** 7 + X * X, d, f7)
    f9 = [0, 0, 1, 0, 0, 0, 0, 0, 0, 1]  # X^9 + X^2
    for d in (1, 2):
        allok &= run_case("F9 X^9+X^2", 3, 2, lambda X: X ** 9 + X * X, d, f9)
    print("ALL MATCH" if allok else "DIVERGENCE FOUND", flush=True)


if __name__ == "__main__":
    main()
