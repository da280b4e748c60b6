"""Factor-degree oracle by exhaustive trial division.

Factors a monic polynomial of degree <= 6 the slow way: scan every
field element for roots, then every monic quadratic, then every monic
cubic, dividing out each hit with its multiplicity. Whatever survives
with no divisor of degree <= 3 is a single irreducible factor. No
distinct-degree machinery, no gcds, no library imports.

Prime fields use numpy arithmetic mod p directly; extension fields go
through the dense multiplication tables of oracle_extfactor.TableField,
so packed values coincide with the package representation.
"""

import numpy as np

from oracle_extfactor import TableField


class PrimeOps:
    def __init__(self, p):
        self.q = p
        self.p = p
        self.modulus = [0, 1]

    def smul(self, a, b):
        return (a * b) % self.p

    def sadd(self, a, b):
        return (a + b) % self.p

    def sneg(self, a):
        return (-a) % self.p

    def vmul(self, a, b):
        return (a * b) % self.p

    def vadd(self, a, b):
        return (a + b) % self.p


class TableOps:
    def __init__(self, p, m):
        F = TableField(p, m)
        self.q = F.order
        self.p = p
        self.modulus = F.modulus
        self._mul = F.MUL.astype(np.int64)
        self._add = F.ADD.astype(np.int64)
        self._neg = F.NEG.astype(np.int64)

    def smul(self, a, b):
        return int(self._mul[a, b])

    def sadd(self, a, b):
        return int(self._add[a, b])

    def sneg(self, a):
        return int(self._neg[a])

    def vmul(self, a, b):
        return self._mul[a, b]

    def vadd(self, a, b):
        return self._add[a, b]


def make_ops(p, m):
    return PrimeOps(p) if m == 1 else TableOps(p, m)


def _synth_div(ops, coeffs, alpha):
    """Divide by X - alpha; returns (quotient, remainder scalar)."""
    acc = 0
    out = []
    for c in reversed(coeffs):
        acc = ops.sadd(c, ops.smul(acc, alpha))
        out.append(acc)
    rem = out[-1]
    return list(reversed(out[:-1])), rem


def _divmod_monic(ops, a, b):
    """Scalar divmod of packed lists by a monic divisor."""
    a = list(a)
    db = len(b) - 1
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - db
        c = a[-1]
        q[shift] = c
        for i in range(db + 1):
            a[shift + i] = ops.sadd(a[shift + i], ops.sneg(ops.smul(c, b[i])))
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _divide_out(ops, work, divisor):
    """Remove divisor^multiplicity from work; returns (work, multiplicity)."""
    mult = 0
    while len(work) - 1 >= len(divisor) - 1:
        cand, rem = _divmod_monic(ops, work, divisor)
        if rem:
            break
        work = cand
        mult += 1
    return work, mult


def _root_candidates(ops, coeffs):
    pts = np.arange(ops.q, dtype=np.int64)
    val = np.full(ops.q, coeffs[-1], dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        val = ops.vadd(ops.vmul(val, pts), np.full(ops.q, c, dtype=np.int64))
    return [int(x) for x in pts[val == 0]]


def _quadratic_divisors(ops, coeffs):
    """All (b, c) with X^2 + bX + c dividing the root-free input."""
    q = ops.q
    B = np.repeat(np.arange(q, dtype=np.int64), q)
    C = np.tile(np.arange(q, dtype=np.int64), q)
    D = len(coeffs) - 1
    r1 = np.full(q * q, coeffs[D], dtype=np.int64)
    r0 = np.full(q * q, coeffs[D - 1], dtype=np.int64)
    for i in range(D - 2, -1, -1):
        t = r1
        r1 = ops.vadd(r0, negv(ops, ops.vmul(B, t)))
        r0 = ops.vadd(np.full(q * q, coeffs[i], dtype=np.int64),
                      negv(ops, ops.vmul(C, t)))
    hits = (r1 == 0) & (r0 == 0)
    return [(int(b), int(c)) for b, c in zip(B[hits], C[hits])]


def _cubic_divisors(ops, coeffs):
    """All (b, c, d) with X^3 + bX^2 + cX + d dividing the input."""
    q = ops.q
    n = q * q * q
    idx = np.arange(n, dtype=np.int64)
    B = idx // (q * q)
    C = (idx // q) % q
    D3 = idx % q
    D = len(coeffs) - 1
    r2 = np.full(n, coeffs[D], dtype=np.int64)
    r1 = np.full(n, coeffs[D - 1], dtype=np.int64)
    r0 = np.full(n, coeffs[D - 2], dtype=np.int64)
    for i in range(D - 3, -1, -1):
        t = r2
        r2 = ops.vadd(r1, negv(ops, ops.vmul(B, t)))
        r1 = ops.vadd(r0, negv(ops, ops.vmul(C, t)))
        r0 = ops.vadd(np.full(n, coeffs[i], dtype=np.int64),
                      negv(ops, ops.vmul(D3, t)))
    hits = (r2 == 0) & (r1 == 0) & (r0 == 0)
    return [(int(b), int(c), int(d))
            for b, c, d in zip(B[hits], C[hits], D3[hits])]


def negv(ops, a):
    if isinstance(ops, PrimeOps):
        return (-a) % ops.p
    return ops._neg[a]


def oracle_profile(ops, coeffs):
    """{(degree, multiplicity): count} for a monic f of degree 1..6.

    Divisor candidates up to degree 3 are scanned exhaustively; a
    root-free, quadratic-free, cubic-free leftover of degree <= 6 is
    necessarily a single irreducible factor (two nonlinear factors
    would need degree >= 8).
    """
    assert coeffs[-1] == 1 and 1 <= len(coeffs) - 1 <= 6
    work = list(coeffs)
    found = {}

    for alpha in _root_candidates(ops, work):
        divisor = [ops.sneg(alpha), 1]
        work, mult = _divide_out(ops, work, divisor)
        key = (1, mult)
        found[key] = found.get(key, 0) + 1

    if len(work) - 1 >= 4:
        for b, c in _quadratic_divisors(ops, work):
            work, mult = _divide_out(ops, work, [c, b, 1])
            if mult:
                key = (2, mult)
                found[key] = found.get(key, 0) + 1

    if len(work) - 1 == 6:
        for b, c, d in _cubic_divisors(ops, work):
            work, mult = _divide_out(ops, work, [d, c, b, 1])
            if mult:
                key = (3, mult)
                found[key] = found.get(key, 0) + 1

    rest = len(work) - 1
    if rest > 0:
        key = (rest, 1)
        found[key] = found.get(key, 0) + 1
    return found
