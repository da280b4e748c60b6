"""Polynomial ring operations, factorization helpers, resultants."""

import random

import pytest
import sympy

from unipoly.errors import (
    DivisionByZero,
    NotSquarefree,
    SpecMismatch,
    ZeroInput,
)
from unipoly.field import embed_field, field_create
from unipoly.poly import (
    FactorDegreeProfile,
    Polynomial,
    poly_gen,
    poly_parse_canonical,
    resultant,
    resultant_in_y,
)

PRIME_FIELDS = [2, 3, 5, 7, 13]
EXT_FIELDS = [(3, 2, (1, 0, 1)), (2, 4, (1, 1, 0, 0, 1)), (5, 2, None)]


def all_specs():
    out = [field_create(p) for p in PRIME_FIELDS]
    out.extend(field_create(p, m, modulus=mod) for p, m, mod in EXT_FIELDS)
    return out


def rand_poly(spec, rng, max_deg, monic=False, nonzero=False):
    deg = rng.randrange(0, max_deg + 1)
    packed = [rng.randrange(spec.order) for _ in range(deg + 1)]
    if monic:
        packed[-1] = 1
    elif nonzero or packed[-1] == 0:
        while packed[-1] == 0:
            packed[-1] = rng.randrange(spec.order)
    return Polynomial.from_packed(spec, packed)


def naive_mul(f, g):
    """Schoolbook convolution through element arithmetic."""
    spec = f.spec
    if f.is_zero() or g.is_zero():
        return Polynomial(spec)
    fc, gc = f.coeffs, g.coeffs
    out = [spec.zero() for _ in range(len(fc) + len(gc) - 1)]
    for i, a in enumerate(fc):
        for j, b in enumerate(gc):
            out[i + j] = out[i + j] + a * b
    return Polynomial(spec, out)


def test_mul_matches_schoolbook():
    rng = random.Random(314)
    for spec in all_specs():
        for _ in range(40):
            f = rand_poly(spec, rng, 6)
            g = rand_poly(spec, rng, 6)
            assert f * g == naive_mul(f, g)


def test_add_sub_neg_consistency():
    rng = random.Random(159)
    for spec in all_specs():
        zero = Polynomial(spec)
        for _ in range(40):
            f = rand_poly(spec, rng, 6)
            g = rand_poly(spec, rng, 6)
            assert f + g - g == f
            assert f + (-f) == zero
            assert -(-f) == f
            assert f - g == f + (-g)


def test_divmod_invariant():
    rng = random.Random(265)
    for spec in all_specs():
        for _ in range(50):
            f = rand_poly(spec, rng, 8)
            g = rand_poly(spec, rng, 4, nonzero=True)
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.is_zero() or r.degree < g.degree
            assert f // g == q and f % g == r


def test_division_by_zero_poly():
    spec = field_create(5)
    with pytest.raises(DivisionByZero):
        divmod(poly_gen(spec), Polynomial(spec))
    with pytest.raises(DivisionByZero):
        poly_gen(spec).powmod(3, Polynomial(spec))


def test_pow_and_powmod():
    rng = random.Random(358)
    for spec in all_specs():
        X = poly_gen(spec)
        for _ in range(15):
            f = rand_poly(spec, rng, 3)
            m = rand_poly(spec, rng, 4, monic=True)
            if m.degree < 1:
                continue
            assert f ** 3 == f * f * f
            assert f ** 0 == Polynomial(spec, [spec.one()])
            assert f.powmod(5, m) == (f ** 5) % m
        assert (X + 1) ** 2 == X * X + 2 * X + 1


def test_evaluation_is_ring_morphism():
    rng = random.Random(979)
    for spec in all_specs():
        for _ in range(30):
            f = rand_poly(spec, rng, 5)
            g = rand_poly(spec, rng, 5)
            x = spec.random_element(rng)
            assert (f + g)(x) == f(x) + g(x)
            assert (f * g)(x) == f(x) * g(x)


def test_derivative_product_rule():
    rng = random.Random(323)
    for spec in all_specs():
        for _ in range(30):
            f = rand_poly(spec, rng, 5)
            g = rand_poly(spec, rng, 5)
            assert (f * g).derivative() == f.derivative() * g + f * g.derivative()
            assert (f + g).derivative() == f.derivative() + g.derivative()


def test_derivative_kills_pth_powers():
    spec = field_create(3)
    X = poly_gen(spec)
    assert (X ** 3).derivative().is_zero()
    assert ((X + 1) ** 3).derivative().is_zero()
    assert (X ** 4).derivative() == X ** 3


def test_shift_constant_pointwise():
    rng = random.Random(846)
    for spec in all_specs():
        for _ in range(20):
            f = rand_poly(spec, rng, 5)
            t0 = spec.random_element(rng)
            shifted = f.shift_constant(t0)
            for _ in range(8):
                x = spec.random_element(rng)
                assert shifted(x) == f(x) - t0


def test_gcd_properties():
    rng = random.Random(264)
    for spec in all_specs():
        for _ in range(25):
            f = rand_poly(spec, rng, 5)
            g = rand_poly(spec, rng, 5)
            h = rand_poly(spec, rng, 3, monic=True)
            d = f.gcd(g)
            if not d.is_zero():
                assert (f % d).is_zero() and (g % d).is_zero()
                assert d.is_monic()
            if not (f.is_zero() or g.is_zero() or h.degree < 1):
                assert (f * h).gcd(g * h) == h.monic() * f.gcd(g)


def test_monic_and_lc():
    spec = field_create(7)
    X = poly_gen(spec)
    f = 3 * X ** 2 + X + 5
    assert f.lc() == spec.from_int(3)
    assert f.monic().lc() == spec.one()
    assert f.monic() * 3 == f


def test_squarefree_decomposition_reconstructs():
    rng = random.Random(111)
    for spec in all_specs():
        for _ in range(20):
            f = rand_poly(spec, rng, 8, nonzero=True)
            parts = f.squarefree_decomposition()
            acc = Polynomial(spec, [f.lc()])
            for h, mult in parts:
                assert h.is_monic()
                assert h.is_squarefree()
                acc = acc * h ** mult
            assert acc == f
            # parts are pairwise coprime
            one = Polynomial(spec, [spec.one()])
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    assert parts[i][0].gcd(parts[j][0]) == one


def test_squarefree_decomposition_char_p_powers():
    spec = field_create(3)
    X = poly_gen(spec)
    f = (X + 1) ** 3 * (X ** 2 + 1)
    parts = dict()
    for h, m in f.squarefree_decomposition():
        parts[m] = parts.get(m, Polynomial(spec, [spec.one()])) * h
    assert parts[3] == X + 1
    assert parts[1] == X ** 2 + 1
    f9 = (X ** 2 + X + 2) ** 9
    [(h, m)] = f9.squarefree_decomposition()
    assert (h, m) == (X ** 2 + X + 2, 9)


def test_is_squarefree_and_radical():
    spec = field_create(5)
    X = poly_gen(spec)
    f = (X + 1) ** 2 * (X + 2)
    assert not f.is_squarefree()
    assert f.radical() == (X + 1) * (X + 2)
    assert f.radical().is_squarefree()
    assert ((X ** 2 + 2) * (X + 3)).is_squarefree()
    with pytest.raises(ZeroInput):
        Polynomial(spec).squarefree_decomposition()
    with pytest.raises(ZeroInput):
        Polynomial(spec).degree_profile()


def test_radical_keeps_root_set():
    rng = random.Random(432)
    spec = field_create(7)
    for _ in range(30):
        f = rand_poly(spec, rng, 6, nonzero=True)
        if f.degree < 1:
            continue
        rad = f.radical()
        for e in spec.elements():
            assert (f(e) == spec.zero()) == (rad(e) == spec.zero())


def sympy_factor_degrees(packed, p):
    x = sympy.Symbol("x")
    expr = sum(int(c) * x ** i for i, c in enumerate(packed))
    _, factors = sympy.factor_list(sympy.Poly(expr, x, modulus=p))
    out = {}
    for fac, mult in factors:
        out[(fac.degree(), mult)] = out.get((fac.degree(), mult), 0) + 1
    return out


def test_degree_profile_matches_sympy_prime_fields():
    rng = random.Random(640)
    for p in PRIME_FIELDS:
        spec = field_create(p)
        for _ in range(60):
            f = rand_poly(spec, rng, 6, monic=True)
            if f.degree < 1:
                continue
            prof = f.degree_profile()
            got = {(e.degree, e.multiplicity): e.count for e in prof.entries}
            assert got == sympy_factor_degrees(f.packed, p), f.canonical()


def test_degree_profile_known_case():
    spec = field_create(3)
    X = poly_gen(spec)
    prof = (X ** 4 + X ** 2).degree_profile()
    assert prof.serialize() == "(1,1,2);(2,1,1)"
    assert prof.total == 4
    assert prof.contains_degree(2) and prof.contains_degree(1)
    assert not prof.contains_degree(3)
    assert not prof.is_squarefree()
    # X^2 contributes degree 1 twice; X^2+1 contributes degree 2 once
    assert prof.degree_multiset() == {1: 2, 2: 1}
    assert FactorDegreeProfile.parse(prof.serialize()) == prof


def test_distinct_degree_factorization_groups_degrees():
    spec = field_create(5)
    X = poly_gen(spec)
    # two linears, one irreducible quadratic, one irreducible cubic
    f = X * (X + 1) * (X ** 2 + 2) * (X ** 3 + X + 1)
    assert (X ** 2 + 2).is_irreducible()
    assert (X ** 3 + X + 1).is_irreducible()
    pieces = dict(f.distinct_degree_factorization())
    assert pieces[1] == X * (X + 1)
    assert pieces[2] == X ** 2 + 2
    assert pieces[3] == X ** 3 + X + 1
    with pytest.raises(NotSquarefree):
        (X * X).distinct_degree_factorization()
    with pytest.raises(ZeroInput):
        Polynomial(spec).distinct_degree_factorization()


def test_is_irreducible_matches_sympy_prime_fields():
    rng = random.Random(888)
    for p in PRIME_FIELDS:
        spec = field_create(p)
        for _ in range(60):
            f = rand_poly(spec, rng, 5, monic=True)
            if f.degree < 1:
                continue
            x = sympy.Symbol("x")
            expr = sum(int(c) * x ** i for i, c in enumerate(f.packed))
            want = sympy.Poly(expr, x, modulus=p).is_irreducible
            assert f.is_irreducible() == want, f.canonical()


def test_is_irreducible_extension_field():
    spec = field_create(3, 2, modulus=(1, 0, 1))
    X = poly_gen(spec)
    u = spec.gen()
    # X^2 - u has no root in GF(9) iff u is a non-residue; u^4 = 1 here
    # since u^2 = -1, so u has order 4 and is a residue iff order | 4
    counts = sum((X ** 2 - e).is_irreducible() for e in spec.elements())
    # exactly (9 - 1) / 2 = 4 non-squares give irreducible quadratics
    assert counts == 4


def sylvester_resultant(f_packed, g_packed, p):
    """det of the Sylvester matrix, exact over the integers then mod p.

    Rows hold descending coefficients, deg(g) shifted copies of f then
    deg(f) copies of g, so det = lc(f)^deg(g) * prod g(roots of f).
    """
    m, n = len(f_packed) - 1, len(g_packed) - 1
    fd = [int(c) for c in reversed(f_packed)]
    gd = [int(c) for c in reversed(g_packed)]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - i - m - 1))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - i - n - 1))
    return int(sympy.Matrix(rows).det()) % p


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(5202)
    for p in PRIME_FIELDS:
        spec = field_create(p)
        for _ in range(40):
            f = rand_poly(spec, rng, 5, nonzero=True)
            g = rand_poly(spec, rng, 5, nonzero=True)
            if f.degree < 1 or g.degree < 1:
                continue
            want = sylvester_resultant(f.packed, g.packed, p)
            assert resultant(f, g).val == want, (f.canonical(), g.canonical())


def test_resultant_multiplicativity_and_common_roots():
    rng = random.Random(2277)
    for spec in all_specs():
        for _ in range(20):
            f = rand_poly(spec, rng, 4, nonzero=True)
            g = rand_poly(spec, rng, 3, nonzero=True)
            h = rand_poly(spec, rng, 3, nonzero=True)
            if min(f.degree, g.degree, h.degree) < 1:
                continue
            lhs = resultant(f, g * h)
            rhs = resultant(f, g) * resultant(f, h)
            assert lhs == rhs
            common = f.gcd(g)
            assert (resultant(f, g) == spec.zero()) == (common.degree >= 1)


def test_resultant_product_over_roots():
    spec = field_create(7)
    rng = random.Random(64)
    for _ in range(20):
        roots = [spec.random_element(rng) for _ in range(3)]
        X = poly_gen(spec)
        f = Polynomial(spec, [spec.one()])
        for r in roots:
            f = f * (X - r)
        g = rand_poly(spec, rng, 3, nonzero=True)
        expect = spec.one()
        for r in roots:
            expect = expect * g(r)
        # Res(f, g) = lc(f)^deg g * prod g(roots of f) with monic f
        assert resultant(f, g) == expect


def test_resultant_in_y_matches_pointwise_resultant():
    rng = random.Random(906)
    for spec in [field_create(5), field_create(7), field_create(3, 2)]:
        for _ in range(12):
            a = rand_poly(spec, rng, 4, monic=True)
            g = rand_poly(spec, rng, 4, nonzero=True)
            if a.degree < 1 or g.degree < 1:
                continue
            R = resultant_in_y(a, g)
            X = poly_gen(spec)
            for y0 in spec.elements():
                # Y - g(X) specialized at Y = y0
                spec_poly = -g + Polynomial(spec, [y0])
                want = resultant(a, spec_poly)
                assert R(y0) == want, (a.canonical(), g.canonical(), y0.val)


def test_resultant_in_y_degree_and_errors():
    spec = field_create(5)
    X = poly_gen(spec)
    R = resultant_in_y(X ** 2 + 1, X ** 3 + X)
    assert R.degree == 2
    with pytest.raises(ZeroInput):
        resultant_in_y(Polynomial(spec), X)
    other = field_create(7)
    with pytest.raises(SpecMismatch):
        resultant_in_y(X + 1, poly_gen(other))


def test_canonical_roundtrip_and_parse():
    rng = random.Random(5510)
    for spec in all_specs():
        for _ in range(10):
            f = rand_poly(spec, rng, 5)
            text = f.canonical()
            assert poly_parse_canonical(text) == f
            assert poly_parse_canonical(text, spec) == f
    with pytest.raises(SpecMismatch):
        poly_parse_canonical(poly_gen(field_create(3)).canonical(), field_create(5))


def test_packed_roundtrip_and_trim():
    spec = field_create(5)
    f = Polynomial.from_packed(spec, (1, 2, 3))
    assert f.packed == (1, 2, 3)
    assert Polynomial(spec, [1, 2, 3, 0, 0]).packed == (1, 2, 3)
    assert Polynomial(spec).packed == ()
    assert Polynomial(spec).degree == -1
    with pytest.raises(ValueError):
        Polynomial.from_packed(spec, (7,))


def test_lift_through_embedding_commutes_with_eval():
    base = field_create(3, 1)
    big = field_create(3, 4)
    emb = embed_field(base, big)
    rng = random.Random(4)
    for _ in range(20):
        f = rand_poly(base, rng, 5)
        lifted = f.lift(emb)
        for _ in range(5):
            x = base.random_element(rng)
            assert lifted(emb(x)) == emb(f(x))


def test_spec_mismatch_poly_ops():
    a = poly_gen(field_create(3))
    b = poly_gen(field_create(5))
    with pytest.raises(SpecMismatch):
        a + b
    with pytest.raises(SpecMismatch):
        a.gcd(b)
    with pytest.raises(SpecMismatch):
        resultant(a, b)
