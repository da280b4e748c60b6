"""Compiled and pure kernels must be operationally indistinguishable."""

import random

import pytest

from unipoly.backend import available_backends, default_backend, get_kernel
from unipoly.backend.pure import PureKernel

compiled_missing = "compiled" not in available_backends()
needs_compiled = pytest.mark.skipif(compiled_missing,
                                    reason="compiled backend not built")

PARITY_FIELDS = [
    (2, 1, (0, 1)),
    (7, 1, (0, 1)),
    (101, 1, (0, 1)),
    (2, 4, (1, 1, 0, 0, 1)),
    (3, 2, (1, 0, 1)),
    (5, 3, (2, 0, 1, 1)),
    (7, 4, (3, 1, 0, 0, 1)),
    (11, 2, (7, 0, 1)),
]


def rand_packed(rng, q, max_deg):
    deg = rng.randrange(0, max_deg + 1)
    f = [rng.randrange(q) for _ in range(deg + 1)]
    while f and f[-1] == 0:
        f.pop()
    return f


@needs_compiled
def test_element_op_parity():
    rng = random.Random(20260819)
    for p, m, mod in PARITY_FIELDS:
        pure = get_kernel(p, m, mod, backend="pure")
        comp = get_kernel(p, m, mod, backend="compiled")
        q = p ** m
        for _ in range(120):
            a, b = rng.randrange(q), rng.randrange(q)
            assert pure.eadd(a, b) == comp.eadd(a, b)
            assert pure.esub(a, b) == comp.esub(a, b)
            assert pure.emul(a, b) == comp.emul(a, b)
            assert pure.eneg(a) == comp.eneg(a)
            assert pure.epow(a, 11) == comp.epow(a, 11)
            assert pure.efrob(a, 1) == comp.efrob(a, 1)
            if b:
                assert pure.einv(b) == comp.einv(b)
                assert pure.ediv(a, b) == comp.ediv(a, b)
            assert pure.unpack(a) == comp.unpack(a)
            assert pure.pack(pure.unpack(a)) == a


@needs_compiled
def test_poly_op_parity():
    rng = random.Random(51)
    for p, m, mod in PARITY_FIELDS:
        pure = get_kernel(p, m, mod, backend="pure")
        comp = get_kernel(p, m, mod, backend="compiled")
        q = p ** m
        for _ in range(60):
            f = rand_packed(rng, q, 7)
            g = rand_packed(rng, q, 5)
            assert pure.padd(f, g) == comp.padd(f, g)
            assert pure.psub(f, g) == comp.psub(f, g)
            assert pure.pmul(f, g) == comp.pmul(f, g)
            assert pure.pneg(f) == comp.pneg(f)
            assert pure.pderiv(f) == comp.pderiv(f)
            x = rng.randrange(q)
            assert pure.peval(f, x) == comp.peval(f, x)
            if g:
                assert pure.pdivrem(f, g) == comp.pdivrem(f, g)
                assert pure.pmod(f, g) == comp.pmod(f, g)
                assert pure.monic(g) == comp.monic(g)
            assert pure.pgcd(f, g) == comp.pgcd(f, g)
            if g and len(g) > 1:
                gm = pure.monic(g)
                assert pure.ppowmod(f, 97, gm) == comp.ppowmod(f, 97, gm)


@needs_compiled
def test_compound_op_parity():
    rng = random.Random(3177)
    for p, m, mod in PARITY_FIELDS:
        pure = get_kernel(p, m, mod, backend="pure")
        comp = get_kernel(p, m, mod, backend="compiled")
        q = p ** m
        for _ in range(25):
            f = rand_packed(rng, q, 6)
            if len(f) < 2:
                continue
            f = pure.monic(f)
            sq_p = [(h, e) for h, e in pure.squarefree(f)]
            sq_c = [(h, e) for h, e in comp.squarefree(f)]
            assert sq_p == sq_c
            assert pure.profile(f) == comp.profile(f)
            assert pure.is_irreducible(f) == comp.is_irreducible(f)
            rad = pure.monic(f)
            if all(e == 1 for _, e in sq_p):
                assert pure.ddf(rad) == comp.ddf(rad)


@needs_compiled
def test_pth_root_parity():
    rng = random.Random(414)
    for p, m, mod in PARITY_FIELDS:
        pure = get_kernel(p, m, mod, backend="pure")
        comp = get_kernel(p, m, mod, backend="compiled")
        q = p ** m
        for _ in range(20):
            # build an exact p-th power, then take its root
            h = rand_packed(rng, q, 3)
            if not h:
                continue
            fp = pure.pmul(h, h)
            for _ in range(p - 2):
                fp = pure.pmul(fp, h)
            assert pure.pth_root(fp) == comp.pth_root(fp)


@needs_compiled
def test_compiled_overflow_falls_back_when_auto():
    # p^m beyond 2^63 cannot be packed into int64
    big_p = (1 << 31) - 1  # Mersenne prime, at the documented cap
    kern = get_kernel(big_p, 3, (1, 1, 0, 1))
    assert isinstance(kern, PureKernel)


@needs_compiled
def test_explicit_compiled_overflow_raises():
    big_p = (1 << 31) - 1
    with pytest.raises(OverflowError):
        get_kernel(big_p, 3, (1, 2, 0, 1), backend="compiled")


def test_default_backend_consistency():
    choice = default_backend()
    assert choice in available_backends()


def test_kernel_cache_distinguishes_backends():
    a = get_kernel(5, 1, (0, 1), backend="pure")
    b = get_kernel(5, 1, (0, 1), backend="pure")
    assert a is b
    if not compiled_missing:
        c = get_kernel(5, 1, (0, 1), backend="compiled")
        assert c is not a
