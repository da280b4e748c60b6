# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled arithmetic kernel; same API and semantics as pure.PureKernel.

Elements are packed ints (base-p digit vectors, little-endian) and
polynomials are Python lists of packed ints at the boundary; internally
every coefficient lives in a flat int64 digit buffer and the hot loops
(division chains, gcds, Frobenius power ladders) never leave C.

Limits: p < 2^31 and p^m < 2^63 so digits, packed values, and digit
products all fit int64 with eager reduction.  Construction raises
OverflowError beyond that; the backend selector falls back to pure.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

from ..errors import DivisionByZero

ctypedef long long i64
ctypedef unsigned long long u64


cdef i64* xmalloc(size_t count) except NULL:
    cdef i64* ptr = <i64*> malloc(count * sizeof(i64))
    if ptr == NULL:
        raise MemoryError()
    return ptr


cdef inline u64 powmod_u64(u64 a, u64 e, u64 p):
    cdef u64 r = 1
    a %= p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


cdef class CKernel:
    cdef readonly object p, m, modulus, order
    cdef readonly str name
    cdef i64 cp
    cdef int cm
    cdef u64 corder
    cdef i64* cmod          # m+1 digits of the field modulus over GF(p)

    def __cinit__(self, p, m, modulus):
        if p >= (1 << 31) or int(p) ** int(m) >= (1 << 63):
            raise OverflowError("field too large for the compiled kernel")
        self.p = int(p)
        self.m = int(m)
        self.modulus = tuple(modulus)
        self.order = int(p) ** int(m)
        self.name = "compiled"
        self.cp = p
        self.cm = m
        self.corder = self.order
        self.cmod = xmalloc(self.cm + 1)
        cdef int i
        for i in range(self.cm + 1):
            self.cmod[i] = self.modulus[i]

    def __dealloc__(self):
        if self.cmod != NULL:
            free(self.cmod)

    # -- digit helpers ----------------------------------------------------

    cdef inline void c_unpack(self, i64 x, i64* out) nogil:
        cdef int i
        cdef i64 p = self.cp
        for i in range(self.cm):
            out[i] = x % p
            x //= p

    cdef inline i64 c_pack(self, i64* d) nogil:
        cdef int i
        cdef i64 acc = 0
        for i in range(self.cm - 1, -1, -1):
            acc = acc * self.cp + d[i]
        return acc

    cdef inline bint c_iszero(self, i64* d) nogil:
        cdef int i
        for i in range(self.cm):
            if d[i]:
                return False
        return True

    # out, a, b must not alias scratch; scratch >= 2m-1; out may alias a/b
    cdef void c_emul(self, i64* a, i64* b, i64* out, i64* s) nogil:
        cdef i64 p = self.cp
        cdef int m = self.cm
        cdef int i, j, k
        cdef i64 c
        if m == 1:
            out[0] = a[0] * b[0] % p
            return
        for i in range(2 * m - 1):
            s[i] = 0
        for i in range(m):
            if a[i]:
                for j in range(m):
                    s[i + j] = (s[i + j] + a[i] * b[j]) % p
        for k in range(2 * m - 2, m - 1, -1):
            c = s[k]
            if c:
                for j in range(m):
                    s[k - m + j] = (s[k - m + j] - c * self.cmod[j]) % p
                    if s[k - m + j] < 0:
                        s[k - m + j] += p
                s[k] = 0
        for i in range(m):
            out[i] = s[i]

    cdef inline void c_eadd(self, i64* a, i64* b, i64* out) nogil:
        cdef int i
        for i in range(self.cm):
            out[i] = (a[i] + b[i]) % self.cp

    cdef inline void c_esub(self, i64* a, i64* b, i64* out) nogil:
        cdef int i
        for i in range(self.cm):
            out[i] = (a[i] - b[i] + self.cp) % self.cp

    # a^e for u64 exponents; scratch >= 4m-1; out must not alias scratch
    cdef void c_epow_u64(self, i64* a, u64 e, i64* out, i64* s) nogil:
        cdef i64* base = s + (2 * self.cm - 1)
        cdef int i
        for i in range(self.cm):
            base[i] = a[i]
            out[i] = 0
        out[0] = 1
        while e:
            if e & 1:
                self.c_emul(out, base, out, s)
            e >>= 1
            if e:
                self.c_emul(base, base, base, s)

    # inverse in GF(p^m) by extended Euclid over GF(p)[u]; buffers malloc'd
    cdef void c_einv(self, i64* a, i64* out) except *:
        cdef i64 p = self.cp
        cdef int m = self.cm
        cdef int i, k, dr0, dr1, dt0, dt1, sh
        cdef i64 c, lead_inv
        if self.c_iszero(a):
            raise DivisionByZero("inversion of zero field element")
        if m == 1:
            out[0] = <i64> powmod_u64(<u64> a[0], <u64> (p - 2), <u64> p)
            return
        cdef i64* buf = xmalloc(4 * (m + 1))
        cdef i64* r0 = buf
        cdef i64* r1 = buf + (m + 1)
        cdef i64* t0 = buf + 2 * (m + 1)
        cdef i64* t1 = buf + 3 * (m + 1)
        try:
            for i in range(m + 1):
                r0[i] = self.cmod[i]
                r1[i] = a[i] if i < m else 0
                t0[i] = 0
                t1[i] = 0
            t1[0] = 1
            dr0 = m
            dr1 = m - 1
            while dr1 >= 0 and r1[dr1] == 0:
                dr1 -= 1
            dt0 = -1
            dt1 = 0
            while dr1 >= 0:
                # r0 -= q*r1 long division step by step; t0 -= q*t1 alongside
                lead_inv = <i64> powmod_u64(<u64> r1[dr1], <u64> (p - 2), <u64> p)
                while dr0 >= dr1:
                    c = r0[dr0] * lead_inv % p
                    if c:
                        sh = dr0 - dr1
                        for i in range(dr1 + 1):
                            r0[sh + i] = (r0[sh + i] - c * r1[i]) % p
                            if r0[sh + i] < 0:
                                r0[sh + i] += p
                        if dt1 + sh > dt0:
                            for i in range(dt0 + 1, dt1 + sh + 1):
                                t0[i] = 0
                            dt0 = dt1 + sh
                        for i in range(dt1 + 1):
                            t0[sh + i] = (t0[sh + i] - c * t1[i]) % p
                            if t0[sh + i] < 0:
                                t0[sh + i] += p
                    dr0 -= 1
                    while dr0 >= 0 and r0[dr0] == 0:
                        dr0 -= 1
                    if dr0 < 0:
                        break
                while dt0 >= 0 and t0[dt0] == 0:
                    dt0 -= 1
                # swap (r0,t0) <-> (r1,t1)
                r0, r1 = r1, r0
                t0, t1 = t1, t0
                dr0, dr1 = dr1, dr0
                dt0, dt1 = dt1, dt0
            # r0 is the (constant) gcd; scale t0 by its inverse
            c = <i64> powmod_u64(<u64> r0[0], <u64> (p - 2), <u64> p)
            for i in range(m):
                out[i] = (t0[i] * c % p) if i <= dt0 else 0
        finally:
            free(buf)

    # -- packed element API -------------------------------------------------

    def unpack(self, x):
        cdef i64 d[64]
        self.c_unpack(x, d)
        return [d[i] for i in range(self.cm)]

    def pack(self, digits):
        acc = 0
        for c in reversed(digits):
            acc = acc * self.p + c
        return acc

    def eadd(self, a, b):
        cdef i64 da[64]
        cdef i64 db[64]
        self.c_unpack(a, da)
        self.c_unpack(b, db)
        self.c_eadd(da, db, da)
        return self.c_pack(da)

    def esub(self, a, b):
        cdef i64 da[64]
        cdef i64 db[64]
        self.c_unpack(a, da)
        self.c_unpack(b, db)
        self.c_esub(da, db, da)
        return self.c_pack(da)

    def eneg(self, a):
        cdef i64 da[64]
        cdef int i
        self.c_unpack(a, da)
        for i in range(self.cm):
            da[i] = (self.cp - da[i]) % self.cp
        return self.c_pack(da)

    def emul(self, a, b):
        if a == 0 or b == 0:
            return 0
        cdef i64 da[64]
        cdef i64 db[64]
        cdef i64 s[128]
        self.c_unpack(a, da)
        self.c_unpack(b, db)
        self.c_emul(da, db, da, s)
        return self.c_pack(da)

    def einv(self, a):
        if a == 0:
            raise DivisionByZero("inversion of zero field element")
        cdef i64 da[64]
        cdef i64 dout[64]
        self.c_unpack(a, da)
        self.c_einv(da, dout)
        return self.c_pack(dout)

    def ediv(self, a, b):
        return self.emul(a, self.einv(b))

    def epow(self, a, e):
        if e < 0:
            a = self.einv(a)
            e = -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.order > 2 and e >= self.order - 1:
            e %= self.order - 1
        cdef i64 da[64]
        cdef i64 dout[64]
        cdef i64 s[256]
        self.c_unpack(a, da)
        self.c_epow_u64(da, <u64> e, dout, s)
        return self.c_pack(dout)

    def efrob(self, a, k):
        return self.epow(a, self.p ** (k % self.m if self.m > 1 else 1))

    # -- polynomial buffers ---------------------------------------------------

    cdef i64* obj_to_buf(self, f, int* length) except NULL:
        """list of packed ints -> malloc'd digit buffer (len(f) coefficients)."""
        cdef int L = len(f)
        cdef int i
        cdef i64* buf = xmalloc(L * self.cm if L else 1)
        for i in range(L):
            self.c_unpack(f[i], buf + i * self.cm)
        length[0] = L
        return buf

    cdef list buf_to_obj(self, i64* buf, int L):
        cdef int i
        return [self.c_pack(buf + i * self.cm) for i in range(L)]

    cdef inline int c_ptrim(self, i64* f, int L) nogil:
        while L and self.c_iszero(f + (L - 1) * self.cm):
            L -= 1
        return L

    # out (la+lb-1 coeffs) must be zeroed by the caller; scratch >= 3m-1
    cdef void c_pmul(self, i64* a, int la, i64* b, int lb,
                     i64* out, i64* s) nogil:
        cdef int i, j, t
        cdef i64 p = self.cp
        cdef int m = self.cm
        cdef i64* tmp = s + (2 * m - 1)
        if la == 0 or lb == 0:
            return
        if m == 1:
            for i in range(la):
                if a[i]:
                    for j in range(lb):
                        out[i + j] = (out[i + j] + a[i] * b[j]) % p
            return
        for i in range(la):
            if self.c_iszero(a + i * m):
                continue
            for j in range(lb):
                if self.c_iszero(b + j * m):
                    continue
                self.c_emul(a + i * m, b + j * m, tmp, s)
                for t in range(m):
                    out[(i + j) * m + t] = (out[(i + j) * m + t] + tmp[t]) % p

    # r := f mod g in place (r prefilled with f, lf coeffs); quotient into q
    # (lf-lg+1 coeffs, zeroed) unless q is NULL.  scratch >= 5m-1.
    # Returns trimmed remainder length.
    cdef int c_pdivrem(self, i64* r, int lf, i64* g, int lg,
                       i64* q, i64* s) except -1:
        cdef int m = self.cm
        cdef int k, j, t
        cdef i64* inv_lead = s + (3 * m - 1)
        cdef i64* coef = s + (4 * m - 1)
        cdef bint monic_g
        if lg == 0:
            raise DivisionByZero("polynomial division by zero")
        lf = self.c_ptrim(r, lf)
        if lf < lg:
            return lf
        monic_g = True
        for t in range(m):
            if g[(lg - 1) * m + t] != (1 if t == 0 else 0):
                monic_g = False
                break
        if not monic_g:
            self.c_einv(g + (lg - 1) * m, inv_lead)
        for k in range(lf - lg, -1, -1):
            if self.c_iszero(r + (lg - 1 + k) * m):
                continue
            if monic_g:
                for t in range(m):
                    coef[t] = r[(lg - 1 + k) * m + t]
            else:
                self.c_emul(r + (lg - 1 + k) * m, inv_lead, coef, s)
            if q != NULL:
                for t in range(m):
                    q[k * m + t] = coef[t]
            for j in range(lg - 1):
                if not self.c_iszero(g + j * m):
                    self.c_emul(coef, g + j * m, s + 2 * m - 1, s)
                    for t in range(m):
                        r[(j + k) * m + t] = (r[(j + k) * m + t]
                                              - s[2 * m - 1 + t]) % self.cp
                        if r[(j + k) * m + t] < 0:
                            r[(j + k) * m + t] += self.cp
            for t in range(m):
                r[(lg - 1 + k) * m + t] = 0
        return self.c_ptrim(r, lg - 1 if lg > 1 else 0)

    # monic-normalize in place; returns length unchanged
    cdef void c_monic(self, i64* f, int L, i64* s) except *:
        cdef int m = self.cm
        cdef int i
        cdef i64* inv_lead = s + (3 * m - 1)
        cdef bint is_one = True
        cdef int t
        if L == 0:
            return
        for t in range(m):
            if f[(L - 1) * m + t] != (1 if t == 0 else 0):
                is_one = False
                break
        if is_one:
            return
        self.c_einv(f + (L - 1) * m, inv_lead)
        for i in range(L):
            if not self.c_iszero(f + i * m):
                self.c_emul(f + i * m, inv_lead, f + i * m, s)

    # gcd into ga (monic); ga/gb are scratch copies, modified.  Needs
    # divrem scratch s (>= 5m-1).  Returns gcd length.
    cdef int c_pgcd(self, i64* ga, int la, i64* gb, int lb, i64* s) except -1:
        cdef i64* a = ga
        cdef i64* b = gb
        cdef int tmp
        la = self.c_ptrim(ga, la)
        lb = self.c_ptrim(gb, lb)
        while lb:
            la = self.c_pdivrem(a, la, b, lb, NULL, s)
            a, b = b, a
            tmp = la
            la = lb
            lb = tmp
        if a != ga:
            memcpy(ga, a, la * self.cm * sizeof(i64))
        self.c_monic(ga, la, s)
        return la

    # result := base^e mod g.  res must hold lg-1 coeffs (zeroed by callee).
    # work must hold (2*lg+2)*m * 3 entries; s is divrem scratch.
    # e is a Python int (arbitrary size).
    cdef int c_ppowmod(self, i64* base, int lb, object e, i64* g, int lg,
                       i64* res, i64* work, i64* s) except -1:
        cdef int m = self.cm
        cdef int cap = 2 * lg + 2
        cdef i64* bb = work                     # reduced base
        cdef i64* prod = work + cap * m         # multiplication output
        cdef int lres, lbb, lp
        cdef int i
        if lg == 0:
            raise DivisionByZero("polynomial division by zero")
        # res := 1 mod g
        memset(res, 0, (lg - 1 if lg > 1 else 1) * m * sizeof(i64))
        if lg == 1:
            return 0  # everything is 0 mod a constant
        res[0] = 1
        lres = 1
        # bb := base mod g
        memcpy(bb, base, lb * m * sizeof(i64))
        lbb = self.c_pdivrem(bb, lb, g, lg, NULL, s)
        while e:
            if e & 1:
                memset(prod, 0, cap * m * sizeof(i64))
                self.c_pmul(res, lres, bb, lbb, prod, s)
                lp = lres + lbb - 1 if (lres and lbb) else 0
                lp = self.c_pdivrem(prod, lp, g, lg, NULL, s)
                memcpy(res, prod, lp * m * sizeof(i64))
                lres = lp
            e >>= 1
            if e:
                memset(prod, 0, cap * m * sizeof(i64))
                self.c_pmul(bb, lbb, bb, lbb, prod, s)
                lp = 2 * lbb - 1 if lbb else 0
                lp = self.c_pdivrem(prod, lp, g, lg, NULL, s)
                memcpy(bb, prod, lp * m * sizeof(i64))
                lbb = lp
        return lres

    # -- polynomial API (lists of packed ints) ---------------------------------

    def padd(self, f, g):
        n = max(len(f), len(g))
        out = [self.eadd(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0)
               for i in range(n)]
        while out and out[-1] == 0:
            out.pop()
        return out

    def psub(self, f, g):
        n = max(len(f), len(g))
        out = [self.esub(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0)
               for i in range(n)]
        while out and out[-1] == 0:
            out.pop()
        return out

    def pneg(self, f):
        return [self.eneg(x) for x in f]

    def pscale(self, f, c):
        if c == 0:
            return []
        out = [self.emul(x, c) for x in f]
        while out and out[-1] == 0:
            out.pop()
        return out

    def pmul(self, f, g):
        cdef int la = 0, lb = 0, lo
        cdef i64* a = NULL
        cdef i64* b = NULL
        cdef i64* out = NULL
        cdef i64* s = NULL
        if not f or not g:
            return []
        a = self.obj_to_buf(f, &la)
        try:
            b = self.obj_to_buf(g, &lb)
            out = xmalloc((la + lb - 1) * self.cm)
            s = xmalloc(3 * self.cm)
            memset(out, 0, (la + lb - 1) * self.cm * sizeof(i64))
            self.c_pmul(a, la, b, lb, out, s)
            lo = self.c_ptrim(out, la + lb - 1)
            return self.buf_to_obj(out, lo)
        finally:
            free(a)
            if b != NULL:
                free(b)
            if out != NULL:
                free(out)
            if s != NULL:
                free(s)

    def pdivrem(self, f, g):
        cdef int lf = 0, lg = 0, lr, lq
        cdef i64* fb = NULL
        cdef i64* gb = NULL
        cdef i64* qb = NULL
        cdef i64* s = NULL
        if not g:
            raise DivisionByZero("polynomial division by zero")
        if len(f) < len(g):
            return [], list(f)
        fb = self.obj_to_buf(f, &lf)
        try:
            gb = self.obj_to_buf(g, &lg)
            qb = xmalloc((lf - lg + 1) * self.cm)
            memset(qb, 0, (lf - lg + 1) * self.cm * sizeof(i64))
            s = xmalloc(5 * self.cm)
            lr = self.c_pdivrem(fb, lf, gb, lg, qb, s)
            lq = self.c_ptrim(qb, lf - lg + 1)
            return self.buf_to_obj(qb, lq), self.buf_to_obj(fb, lr)
        finally:
            free(fb)
            if gb != NULL:
                free(gb)
            if qb != NULL:
                free(qb)
            if s != NULL:
                free(s)

    def pmod(self, f, g):
        return self.pdivrem(f, g)[1]

    def monic(self, f):
        if not f:
            return []
        if f[-1] == 1:
            return list(f)
        return self.pscale(f, self.einv(f[-1]))

    def pgcd(self, f, g):
        cdef int la = 0, lb = 0, lo, i
        cdef i64* a = NULL
        cdef i64* b = NULL
        cdef i64* s = NULL
        cdef int cap
        if not f and not g:
            return []
        cap = max(len(f), len(g), 1)
        a = xmalloc(cap * self.cm)
        try:
            b = xmalloc(cap * self.cm)
            s = xmalloc(5 * self.cm)
            memset(a, 0, cap * self.cm * sizeof(i64))
            memset(b, 0, cap * self.cm * sizeof(i64))
            for i in range(len(f)):
                self.c_unpack(f[i], a + i * self.cm)
            for i in range(len(g)):
                self.c_unpack(g[i], b + i * self.cm)
            lo = self.c_pgcd(a, len(f), b, len(g), s)
            return self.buf_to_obj(a, lo)
        finally:
            free(a)
            if b != NULL:
                free(b)
            if s != NULL:
                free(s)

    def pderiv(self, f):
        out = []
        for i in range(1, len(f)):
            k = i % self.p
            out.append(self.emul(f[i], k) if (k and f[i]) else 0)
        while out and out[-1] == 0:
            out.pop()
        return out

    def peval(self, f, x):
        cdef i64 acc[64]
        cdef i64 dx[64]
        cdef i64 dc[64]
        cdef i64 s[128]
        cdef int i
        memset(acc, 0, self.cm * sizeof(i64))
        self.c_unpack(x, dx)
        for c in reversed(f):
            self.c_emul(acc, dx, acc, s)
            self.c_unpack(c, dc)
            self.c_eadd(acc, dc, acc)
        return self.c_pack(acc)

    def ppowmod(self, base, e, mod):
        cdef int lb = 0, lg = 0, lr
        cdef i64* bb = NULL
        cdef i64* gb = NULL
        cdef i64* res = NULL
        cdef i64* work = NULL
        cdef i64* s = NULL
        cdef int cap
        if e < 0:
            raise ValueError("negative exponent")
        if not mod:
            raise DivisionByZero("polynomial division by zero")
        bb = self.obj_to_buf(base, &lb)
        try:
            gb = self.obj_to_buf(mod, &lg)
            cap = 2 * lg + 2
            if lb > cap:
                # reduce eagerly so work buffers bound everything
                s = xmalloc(5 * self.cm)
                lb = self.c_pdivrem(bb, lb, gb, lg, NULL, s)
                free(s)
                s = NULL
            res = xmalloc(max(lg - 1, 1) * self.cm)
            work = xmalloc(2 * cap * self.cm)
            s = xmalloc(5 * self.cm)
            lr = self.c_ppowmod(bb, lb, e, gb, lg, res, work, s)
            return self.buf_to_obj(res, lr)
        finally:
            free(bb)
            if gb != NULL:
                free(gb)
            if res != NULL:
                free(res)
            if work != NULL:
                free(work)
            if s != NULL:
                free(s)

    # -- compound operations ----------------------------------------------------

    def pth_root(self, f):
        """p-th root of f, assuming f' = 0 (all exponents divisible by p)."""
        cdef int i
        out = []
        inv_frob = self.p ** (self.m - 1)
        for i in range(0, len(f), self.p):
            c = f[i]
            out.append(self.epow(c, inv_frob) if c else 0)
        while out and out[-1] == 0:
            out.pop()
        return out

    def squarefree(self, f):
        """Monic squarefree decomposition, sorted by multiplicity."""
        parts = []
        self._sff(self.monic(f), 1, parts)
        parts.sort(key=lambda t: t[1])
        return parts

    def _sff(self, f, e, out):
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

    def ddf(self, f):
        """Distinct-degree split of a monic squarefree f; all loops in C."""
        cdef int lf = 0, d, lh, lg2, lq, i
        cdef i64* fs = NULL
        cdef i64* h = NULL
        cdef i64* diff = NULL
        cdef i64* gg = NULL
        cdef i64* q = NULL
        cdef i64* work = NULL
        cdef i64* s = NULL
        cdef int m = self.cm
        cdef int cap
        out = []
        fs = self.obj_to_buf(self.monic(f), &lf)
        cap = 2 * lf + 2
        try:
            h = xmalloc(cap * m)
            diff = xmalloc(cap * m)
            gg = xmalloc(cap * m)
            q = xmalloc(cap * m)
            work = xmalloc(2 * cap * m)
            s = xmalloc(5 * m)
            # h := X mod fs
            memset(h, 0, cap * m * sizeof(i64))
            if lf > 2:
                h[m] = 1  # X
                lh = 2
            elif lf == 2:
                # X mod (aX+b): degree-0 remainder
                memset(diff, 0, 2 * m * sizeof(i64))
                diff[m] = 1
                lh = self.c_pdivrem(diff, 2, fs, lf, NULL, s)
                memcpy(h, diff, max(lh, 1) * m * sizeof(i64))
            else:
                lh = 0
            d = 0
            while lf - 1 >= 2 * (d + 1):
                d += 1
                # h := h^order mod fs
                lh = self.c_ppowmod(h, lh, self.order, fs, lf, diff, work, s)
                memcpy(h, diff, max(lh, 1) * m * sizeof(i64))
                # diff := h - X
                memcpy(diff, h, max(lh, 1) * m * sizeof(i64))
                if lh < 2:
                    memset(diff + lh * m, 0, (2 - lh) * m * sizeof(i64))
                diff[m] = (diff[m] - 1) % self.cp
                if diff[m] < 0:
                    diff[m] += self.cp
                lg2 = self.c_ptrim(diff, max(lh, 2))
                # gg := gcd(diff, fs)
                memcpy(gg, fs, lf * m * sizeof(i64))
                lg2 = self.c_pgcd(diff, lg2, gg, lf, s)
                memcpy(gg, diff, max(lg2, 1) * m * sizeof(i64))
                if lg2 > 1:
                    out.append((d, self.buf_to_obj(gg, lg2)))
                    memset(q, 0, cap * m * sizeof(i64))
                    lq = lf - lg2 + 1
                    lf = self.c_pdivrem(fs, lf, gg, lg2, q, s)
                    # quotient becomes the new fs
                    memcpy(fs, q, lq * m * sizeof(i64))
                    lf = self.c_ptrim(fs, lq)
                    lh = self.c_pdivrem(h, lh, fs, lf, NULL, s)
            if lf > 1:
                out.append((lf - 1, self.buf_to_obj(fs, lf)))
            return out
        finally:
            free(fs)
            if h != NULL:
                free(h)
            if diff != NULL:
                free(diff)
            if gg != NULL:
                free(gg)
            if q != NULL:
                free(q)
            if work != NULL:
                free(work)
            if s != NULL:
                free(s)

    def profile(self, f):
        """Degree profile of f: sorted (degree, count, multiplicity) triples."""
        entries = []
        for part, mult in self.squarefree(f):
            for d, block in self.ddf(part):
                entries.append((d, (len(block) - 1) // d, mult))
        entries.sort()
        return entries

    def is_irreducible(self, f):
        """Rabin test, all Frobenius ladders in C."""
        cdef int lf = 0, lh, lx, ld, lg2, i, j
        cdef i64* fs = NULL
        cdef i64* h = NULL
        cdef i64* diff = NULL
        cdef i64* gg = NULL
        cdef i64* work = NULL
        cdef i64* s = NULL
        cdef int m = self.cm
        cdef int cap
        n = len(f) - 1
        if n < 1:
            return False
        if n == 1:
            return True
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
        fs = self.obj_to_buf(self.monic(f), &lf)
        cap = 2 * lf + 2
        try:
            h = xmalloc(cap * m)
            diff = xmalloc(cap * m)
            gg = xmalloc(cap * m)
            work = xmalloc(2 * cap * m)
            s = xmalloc(5 * m)
            memset(h, 0, cap * m * sizeof(i64))
            h[m] = 1  # X (lf >= 3 here)
            lh = 2
            for j in range(1, n + 1):
                lh = self.c_ppowmod(h, lh, self.order, fs, lf, diff, work, s)
                memcpy(h, diff, max(lh, 1) * m * sizeof(i64))
                if j in checkpoints:
                    memcpy(diff, h, max(lh, 1) * m * sizeof(i64))
                    if lh < 2:
                        memset(diff + lh * m, 0, (2 - lh) * m * sizeof(i64))
                    diff[m] = (diff[m] - 1) % self.cp
                    if diff[m] < 0:
                        diff[m] += self.cp
                    lg2 = self.c_ptrim(diff, max(lh, 2))
                    memcpy(gg, fs, lf * m * sizeof(i64))
                    lg2 = self.c_pgcd(diff, lg2, gg, lf, s)
                    if lg2 != 1:
                        return False
            # h must equal X
            if lh != 2:
                return False
            for i in range(m):
                if h[i] != 0 or h[m + i] != (1 if i == 0 else 0):
                    return False
            return True
        finally:
            free(fs)
            if h != NULL:
                free(h)
            if diff != NULL:
                free(diff)
            if gg != NULL:
                free(gg)
            if work != NULL:
                free(work)
            if s != NULL:
                free(s)
