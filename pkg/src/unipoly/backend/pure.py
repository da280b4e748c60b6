"""Pure-Python arithmetic kernel for GF(p^m) and its polynomial ring.

Conventions shared by every backend:

* A field element is a *packed* integer in [0, p^m): the value
  c_0 + c_1*p + ... + c_{m-1}*p^(m-1) encodes the coefficient vector
  (c_0, ..., c_{m-1}) of the element in the generator u (little-endian).
* A polynomial over the field is a list of packed integers, little-endian,
  with no trailing zeros; [] is the zero polynomial.
* The kernel is constructed from (p, m, modulus) where modulus is the
  monic degree-m modulus as a tuple of m+1 residues mod p.  Irreducibility
  of the modulus is the caller's responsibility (the field layer checks).

Kernels are immutable and safe to share between threads.  Inputs are
trusted: range checks happen in the field/polynomial layer, not here.
"""

from __future__ import annotations

from ..errors import DivisionByZero

_KARATSUBA_CUTOFF = 48


# -- GF(p) coefficient-vector helpers (digits are plain ints mod p) -----------

def _gfp_trim(a: list[int]) -> list[int]:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    del a[n:]
    return a


def _gfp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _gfp_trim(out)


def _gfp_divrem(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    db, da = len(b) - 1, len(r) - 1
    if da < db:
        return [], _gfp_trim(r)
    inv_lead = pow(b[db], p - 2, p)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        coef = r[db + k]
        if coef:
            coef = coef * inv_lead % p
            q[k] = coef
            for j in range(db + 1):
                r[j + k] = (r[j + k] - coef * b[j]) % p
    return _gfp_trim(q), _gfp_trim(r)


def _gfp_invmod(a: list[int], mod: list[int], p: int) -> list[int]:
    """Inverse of a modulo mod over GF(p), by the extended Euclidean algorithm."""
    if not a:
        raise DivisionByZero("inversion of zero")
    r0, r1 = list(mod), list(a)
    t0: list[int] = []
    t1: list[int] = [1]
    while r1:
        q, r = _gfp_divrem(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _gfp_sub(t0, _gfp_mul(q, t1, p), p)
    # r0 = gcd, a constant since mod is irreducible
    c = pow(r0[0], p - 2, p)
    return _gfp_trim([x * c % p for x in t0])


def _gfp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _gfp_trim(out)


class PureKernel:
    """Reference implementation of the arithmetic kernel."""

    name = "pure"

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.order = p ** m
        self._mod_digits = list(modulus)
        # powers of p for packing
        self._ppow = [p ** i for i in range(m + 1)]

    # -- element helpers ------------------------------------------------------

    def unpack(self, x: int) -> list[int]:
        p, m = self.p, self.m
        out = [0] * m
        for i in range(m):
            x, out[i] = divmod(x, p)[0], x % p
        return out

    def pack(self, digits: list[int]) -> int:
        acc = 0
        for i in range(len(digits) - 1, -1, -1):
            acc = acc * self.p + digits[i]
        return acc

    # -- element arithmetic (packed ints) -------------------------------------

    def eadd(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.unpack(a), self.unpack(b)
        return self.pack([(x + y) % p for x, y in zip(da, db)])

    def esub(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.unpack(a), self.unpack(b)
        return self.pack([(x - y) % p for x, y in zip(da, db)])

    def eneg(self, a: int) -> int:
        p = self.p
        return self.pack([(-x) % p for x in self.unpack(a)])

    def emul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        prod = _gfp_mul(self.unpack(a), self.unpack(b), self.p)
        _, rem = _gfp_divrem(prod, self._mod_digits, self.p)
        return self.pack(rem + [0] * (self.m - len(rem)))

    def einv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inversion of zero field element")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        inv = _gfp_invmod(self.unpack(a), self._mod_digits, self.p)
        return self.pack(inv + [0] * (self.m - len(inv)))

    def ediv(self, a: int, b: int) -> int:
        return self.emul(a, self.einv(b))

    def epow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.einv(a)
            e = -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.order > 2 and e >= self.order - 1:
            e %= self.order - 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.emul(result, base)
            base = self.emul(base, base)
            e >>= 1
        return result

    def efrob(self, a: int, k: int) -> int:
        """Frobenius power a^(p^k)."""
        return self.epow(a, self.p ** (k % self.m if self.m > 1 else 1))

    # -- polynomial arithmetic (lists of packed ints) --------------------------

    @staticmethod
    def pdeg(f: list[int]) -> int:
        return len(f) - 1

    @staticmethod
    def _trim(f: list[int]) -> list[int]:
        n = len(f)
        while n and f[n - 1] == 0:
            n -= 1
        del f[n:]
        return f

    def padd(self, f: list[int], g: list[int]) -> list[int]:
        n = max(len(f), len(g))
        out = [0] * n
        for i in range(n):
            x = f[i] if i < len(f) else 0
            y = g[i] if i < len(g) else 0
            out[i] = self.eadd(x, y)
        return self._trim(out)

    def psub(self, f: list[int], g: list[int]) -> list[int]:
        n = max(len(f), len(g))
        out = [0] * n
        for i in range(n):
            x = f[i] if i < len(f) else 0
            y = g[i] if i < len(g) else 0
            out[i] = self.esub(x, y)
        return self._trim(out)

    def pneg(self, f: list[int]) -> list[int]:
        return [self.eneg(x) for x in f]

    def pscale(self, f: list[int], c: int) -> list[int]:
        if c == 0:
            return []
        return self._trim([self.emul(x, c) for x in f])

    def pmul(self, f: list[int], g: list[int]) -> list[int]:
        if not f or not g:
            return []
        if min(len(f), len(g)) >= _KARATSUBA_CUTOFF:
            return self._trim(self._kmul(f, g))
        emul, eadd = self.emul, self.eadd
        out = [0] * (len(f) + len(g) - 1)
        for i, fi in enumerate(f):
            if fi:
                for j, gj in enumerate(g):
                    if gj:
                        out[i + j] = eadd(out[i + j], emul(fi, gj))
        return self._trim(out)

    def _kmul(self, f: list[int], g: list[int]) -> list[int]:
        # Karatsuba; returns unnormalized coefficient list
        if min(len(f), len(g)) < _KARATSUBA_CUTOFF:
            emul, eadd = self.emul, self.eadd
            if not f or not g:
                return []
            out = [0] * (len(f) + len(g) - 1)
            for i, fi in enumerate(f):
                if fi:
                    for j, gj in enumerate(g):
                        if gj:
                            out[i + j] = eadd(out[i + j], emul(fi, gj))
            return out
        h = max(len(f), len(g)) // 2
        f0, f1 = f[:h], f[h:]
        g0, g1 = g[:h], g[h:]
        lo = self._kmul(f0, g0)
        hi = self._kmul(f1, g1)
        fs = [self.eadd(f0[i] if i < len(f0) else 0, f1[i] if i < len(f1) else 0)
              for i in range(max(len(f0), len(f1)))]
        gs = [self.eadd(g0[i] if i < len(g0) else 0, g1[i] if i < len(g1) else 0)
              for i in range(max(len(g0), len(g1)))]
        mid = self._kmul(fs, gs)
        out = [0] * (len(f) + len(g) - 1)
        for i, v in enumerate(lo):
            out[i] = self.eadd(out[i], v)
        for i, v in enumerate(mid):
            t = v
            if i < len(lo):
                t = self.esub(t, lo[i])
            if i < len(hi):
                t = self.esub(t, hi[i])
            if t:
                out[i + h] = self.eadd(out[i + h], t)
        for i, v in enumerate(hi):
            if v:
                out[i + 2 * h] = self.eadd(out[i + 2 * h], v)
        return out

    def pdivrem(self, f: list[int], g: list[int]) -> tuple[list[int], list[int]]:
        if not g:
            raise DivisionByZero("polynomial division by zero")
        r = list(f)
        dg = len(g) - 1
        if len(r) - 1 < dg:
            return [], r
        inv_lead = self.einv(g[dg])
        q = [0] * (len(r) - dg)
        emul, esub = self.emul, self.esub
        for k in range(len(r) - 1 - dg, -1, -1):
            coef = r[dg + k]
            if coef:
                coef = emul(coef, inv_lead)
                q[k] = coef
                for j in range(dg):
                    gj = g[j]
                    if gj:
                        r[j + k] = esub(r[j + k], emul(coef, gj))
                r[dg + k] = 0
        return self._trim(q), self._trim(r)

    def pmod(self, f: list[int], g: list[int]) -> list[int]:
        return self.pdivrem(f, g)[1]

    def monic(self, f: list[int]) -> list[int]:
        if not f:
            return []
        lead = f[-1]
        if lead == 1:
            return list(f)
        return self.pscale(f, self.einv(lead))

    def pgcd(self, f: list[int], g: list[int]) -> list[int]:
        a, b = list(f), list(g)
        while b:
            a, b = b, self.pmod(a, b)
        return self.monic(a)

    def pderiv(self, f: list[int]) -> list[int]:
        p = self.p
        out = [0] * max(len(f) - 1, 0)
        for i in range(1, len(f)):
            s = i % p
            if s and f[i]:
                out[i - 1] = self.emul(f[i], s)
        return self._trim(out)

    def peval(self, f: list[int], x: int) -> int:
        acc = 0
        emul, eadd = self.emul, self.eadd
        for c in reversed(f):
            acc = eadd(emul(acc, x), c)
        return acc

    def ppowmod(self, base: list[int], e: int, mod: list[int]) -> list[int]:
        if e < 0:
            raise ValueError("negative exponent")
        result = self.pmod([1], mod)
        base = self.pmod(base, mod)
        while e:
            if e & 1:
                result = self.pmod(self.pmul(result, base), mod)
            e >>= 1
            if e:
                base = self.pmod(self.pmul(base, base), mod)
        return result

    # -- compound operations ---------------------------------------------------

    def pth_root(self, f: list[int]) -> list[int]:
        """p-th root of f, assuming f' = 0 (all exponents divisible by p)."""
        p, m = self.p, self.m
        out = [0] * ((len(f) + p - 1) // p)
        inv_frob = self.p ** (m - 1)
        for i in range(0, len(f), p):
            c = f[i]
            out[i // p] = self.epow(c, inv_frob) if c else 0
        return self._trim(out)

    def squarefree(self, f: list[int]) -> list[tuple[list[int], int]]:
        """Monic squarefree decomposition: f ~ prod part^mult, parts coprime.

        Characteristic-p aware: blocks with vanishing derivative recurse
        through a coefficient-wise p-th root.
        """
        parts: list[tuple[list[int], int]] = []
        self._sff(self.monic(f), 1, parts)
        parts.sort(key=lambda t: t[1])
        return parts

    def _sff(self, f: list[int], e: int, out: list[tuple[list[int], int]]) -> None:
        if len(f) <= 1:
            return
        fp = self.pderiv(f)
        if not fp:
            self._sff(self.pth_root(f), e * self.p, out)
            return
        c = self.pgcd(f, fp)
        w = self.pdivrem(f, c)[0]
        i = 1
        while len(w) > 1:
            y = self.pgcd(w, c)
            z = self.pdivrem(w, y)[0]
            if len(z) > 1:
                out.append((z, e * i))
            w = y
            c = self.pdivrem(c, y)[0]
            i += 1
        if len(c) > 1:
            self._sff(self.pth_root(c), e * self.p, out)

    def ddf(self, f: list[int]) -> list[tuple[int, list[int]]]:
        """Distinct-degree split of a monic squarefree f.

        Returns [(d, product of all degree-d irreducible factors)] with the
        Frobenius power X^(Q^d) walked by repeated powmod with exponent Q.
        """
        fs = self.monic(f)
        x = [0, 1]
        out: list[tuple[int, list[int]]] = []
        h = self.pmod(x, fs)
        d = 0
        while len(fs) - 1 >= 2 * (d + 1):
            d += 1
            h = self.ppowmod(h, self.order, fs)
            g = self.pgcd(self.psub(h, x), fs)
            if len(g) > 1:
                out.append((d, g))
                fs = self.pdivrem(fs, g)[0]
                h = self.pmod(h, fs)
        if len(fs) > 1:
            out.append((len(fs) - 1, fs))
        return out

    def profile(self, f: list[int]) -> list[tuple[int, int, int]]:
        """Degree profile of f: sorted (degree, count, multiplicity) triples."""
        entries = []
        for part, mult in self.squarefree(f):
            for d, block in self.ddf(part):
                entries.append((d, (len(block) - 1) // d, mult))
        entries.sort()
        return entries

    def is_irreducible(self, f: list[int]) -> bool:
        """Rabin test: X^(Q^n) = X mod f and gcd(X^(Q^(n/r)) - X, f) = 1."""
        n = len(f) - 1
        if n < 1:
            return False
        if n == 1:
            return True
        f = self.monic(f)
        checkpoints = set()
        k = n
        d = 2
        while d * d <= k:
            if k % d == 0:
                checkpoints.add(n // d)
                while k % d == 0:
                    k //= d
            d += 1
        if k > 1:
            checkpoints.add(n // k)
        x = [0, 1]
        h = self.pmod(x, f)
        for j in range(1, n + 1):
            h = self.ppowmod(h, self.order, f)
            if j in checkpoints:
                if len(self.pgcd(self.psub(h, x), f)) != 1:
                    return False
        return h == self.pmod(x, f)
