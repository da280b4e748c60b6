"""Dense univariate polynomials over a FieldSpec.

Coefficients are stored little-endian as packed field elements with no
trailing zeros; the zero polynomial has an empty coefficient tuple and
degree -1.  Integer inputs to constructors and operators are coerced as
prime-subfield constants (reduced mod p), FieldElements are taken as-is.

Beyond ring arithmetic this module provides the factorization-shape
toolchain (squarefree decomposition, distinct-degree factorization,
degree profiles, Rabin irreducibility) and the one bivariate operation
needed by the critical-value criterion: the resultant of a(X) against
Y - g(X), eliminating X, computed by a fraction-free subresultant
pseudo-remainder sequence over GF(q)[Y].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import (
    DivisionByZero,
    NotSquarefree,
    SpecMismatch,
    ZeroInput,
)
from .field import Embedding, FieldElement, FieldSpec

Scalar = Union["FieldElement", int]


@dataclass(frozen=True)
class ProfileEntry:
    """`count` distinct irreducible factors of this degree, each occurring
    with this multiplicity."""
    degree: int
    count: int
    multiplicity: int


@dataclass(frozen=True)
class FactorDegreeProfile:
    """Multiset of irreducible-factor degrees of a polynomial.

    Entries are sorted; total always equals the degree of the profiled
    polynomial.  Equal-degree factors are never separated, only counted.
    """
    entries: tuple[ProfileEntry, ...]

    @property
    def total(self) -> int:
        return sum(e.degree * e.count * e.multiplicity for e in self.entries)

    def contains_degree(self, ell: int) -> bool:
        return any(e.degree == ell for e in self.entries)

    def is_squarefree(self) -> bool:
        return all(e.multiplicity == 1 for e in self.entries)

    def degree_multiset(self) -> dict[int, int]:
        """Map degree -> number of irreducible factors counted with multiplicity."""
        out: dict[int, int] = {}
        for e in self.entries:
            out[e.degree] = out.get(e.degree, 0) + e.count * e.multiplicity
        return out

    def serialize(self) -> str:
        return ";".join(f"({e.degree},{e.count},{e.multiplicity})" for e in self.entries)

    @classmethod
    def parse(cls, text: str) -> "FactorDegreeProfile":
        entries = []
        text = text.strip()
        if text:
            for chunk in text.split(";"):
                d, c, m = (int(v) for v in chunk.strip()[1:-1].split(","))
                entries.append(ProfileEntry(d, c, m))
        return cls(tuple(entries))

    def __str__(self) -> str:
        return self.serialize()


class Polynomial:
    """Immutable dense polynomial over a fixed FieldSpec."""

    __slots__ = ("spec", "_c")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[Scalar] = ()):
        packed = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.spec != spec:
                    raise SpecMismatch("coefficient from a different field")
                packed.append(c.val)
            else:
                packed.append(int(c) % spec.p)
        while packed and packed[-1] == 0:
            packed.pop()
        self.spec = spec
        self._c = tuple(packed)

    @classmethod
    def from_packed(cls, spec: FieldSpec, packed: Iterable[int]) -> "Polynomial":
        self = object.__new__(cls)
        vals = list(packed)
        while vals and vals[-1] == 0:
            vals.pop()
        for v in vals:
            if not 0 <= v < spec.order:
                raise ValueError(f"packed coefficient {v} outside field of order {spec.order}")
        self.spec = spec
        self._c = tuple(vals)
        return self

    @property
    def packed(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, v) for v in self._c)

    def coeff(self, i: int) -> FieldElement:
        v = self._c[i] if 0 <= i < len(self._c) else 0
        return FieldElement(self.spec, v)

    def lc(self) -> FieldElement:
        if not self._c:
            return FieldElement(self.spec, 0)
        return FieldElement(self.spec, self._c[-1])

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            if other.spec != self.spec:
                raise SpecMismatch("polynomials over different fields")
            return other
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch("scalar from a different field")
            return Polynomial.from_packed(self.spec, (other.val,))
        if isinstance(other, int):
            return Polynomial.from_packed(self.spec, (other % self.spec.p,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = self.spec.kernel
        return Polynomial.from_packed(self.spec, k.padd(list(self._c), list(o._c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = self.spec.kernel
        return Polynomial.from_packed(self.spec, k.psub(list(self._c), list(o._c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = self.spec.kernel
        return Polynomial.from_packed(self.spec, k.psub(list(o._c), list(self._c)))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = self.spec.kernel
        return Polynomial.from_packed(self.spec, k.pmul(list(self._c), list(o._c)))

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial.from_packed(self.spec, self.spec.kernel.pneg(list(self._c)))

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q, r = self.spec.kernel.pdivrem(list(self._c), list(o._c))
        return (Polynomial.from_packed(self.spec, q), Polynomial.from_packed(self.spec, r))

    def __floordiv__(self, other):
        res = self.__divmod__(other)
        return res[0] if res is not NotImplemented else NotImplemented

    def __mod__(self, other):
        res = self.__divmod__(other)
        return res[1] if res is not NotImplemented else NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.from_packed(self.spec, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        o = self._coerce(modulus)
        if o is None or o.is_zero():
            raise DivisionByZero("powmod by zero modulus")
        k = self.spec.kernel
        return Polynomial.from_packed(self.spec, k.ppowmod(list(self._c), e, list(o._c)))

    def __call__(self, point: Scalar) -> FieldElement:
        if isinstance(point, FieldElement):
            if point.spec != self.spec:
                raise SpecMismatch("evaluation point from a different field")
            v = point.val
        else:
            v = int(point) % self.spec.p
        return FieldElement(self.spec, self.spec.kernel.peval(list(self._c), v))

    def derivative(self) -> "Polynomial":
        return Polynomial.from_packed(self.spec, self.spec.kernel.pderiv(list(self._c)))

    def monic(self) -> "Polynomial":
        return Polynomial.from_packed(self.spec, self.spec.kernel.monic(list(self._c)))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            raise SpecMismatch("gcd with a non-polynomial")
        k = self.spec.kernel
        return Polynomial.from_packed(self.spec, k.pgcd(list(self._c), list(o._c)))

    def shift_constant(self, t0: FieldElement) -> "Polynomial":
        """f - t0 for a field constant t0; the sweep hot path."""
        if t0.spec != self.spec:
            raise SpecMismatch("shift constant from a different field")
        k = self.spec.kernel
        c = list(self._c) if self._c else [0]
        c[0] = k.esub(c[0], t0.val)
        return Polynomial.from_packed(self.spec, c)

    # -- factorization shape ------------------------------------------------------

    def squarefree_decomposition(self) -> list[tuple["Polynomial", int]]:
        """Monic pairwise-coprime parts with multiplicities; f = lc * prod part^mult."""
        if self.is_zero():
            raise ZeroInput("squarefree decomposition of the zero polynomial")
        parts = self.spec.kernel.squarefree(list(self._c))
        return [(Polynomial.from_packed(self.spec, c), m) for c, m in parts]

    def is_squarefree(self) -> bool:
        if self.is_zero():
            return False
        if self.degree == 0:
            return True
        d = self.derivative()
        if d.is_zero():
            return False
        return self.gcd(d).degree == 0

    def radical(self) -> "Polynomial":
        """Product of the distinct monic irreducible factors."""
        out = Polynomial.from_packed(self.spec, (1,))
        for part, _ in self.squarefree_decomposition():
            out = out * part
        return out

    def distinct_degree_factorization(self) -> list[tuple[int, "Polynomial"]]:
        """(d, product of all degree-d irreducible factors) for monic squarefree input."""
        if self.is_zero():
            raise ZeroInput("distinct-degree factorization of the zero polynomial")
        if not self.is_squarefree():
            raise NotSquarefree(f"input is not squarefree: {self}")
        blocks = self.spec.kernel.ddf(list(self._c))
        return [(d, Polynomial.from_packed(self.spec, c)) for d, c in blocks]

    def degree_profile(self) -> FactorDegreeProfile:
        """Exact multiset of irreducible factor degrees with multiplicities."""
        if self.is_zero():
            raise ZeroInput("degree profile of the zero polynomial")
        triples = self.spec.kernel.profile(list(self._c))
        return FactorDegreeProfile(tuple(ProfileEntry(*t) for t in triples))

    def is_irreducible(self) -> bool:
        return self.spec.kernel.is_irreducible(list(self._c))

    # -- plumbing -----------------------------------------------------------------

    def lift(self, emb: Embedding) -> "Polynomial":
        """Coefficient-wise image under an embedding into a larger field."""
        if self.spec != emb.source:
            raise SpecMismatch("polynomial does not live over the embedding source")
        return Polynomial.from_packed(emb.target, [emb.map_packed(v) for v in self._c])

    def canonical(self) -> str:
        inner = ",".join(str(v) for v in self._c)
        return f"[{inner}]@{self.spec.canonical()}"

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.spec == other.spec and self._c == other._c
        if isinstance(other, (FieldElement, int)):
            o = self._coerce(other)
            return o is not None and self._c == o._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self._c))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            v = self._c[i]
            if v == 0:
                continue
            c = FieldElement(self.spec, v)
            cs = str(c)
            if i == 0:
                terms.append(cs)
                continue
            xs = "X" if i == 1 else f"X^{i}"
            if v == 1:
                terms.append(xs)
            elif "+" in cs:
                terms.append(f"({cs})*{xs}")
            else:
                terms.append(f"{cs}*{xs}")
        return " + ".join(terms)


def poly_gen(spec: FieldSpec) -> Polynomial:
    """The polynomial X."""
    return Polynomial.from_packed(spec, (0, 1))


def poly_parse_canonical(text: str, spec: FieldSpec | None = None) -> Polynomial:
    """Parse "[c0,c1,...]@p=..;m=..;modulus=[...]" (packed coefficients)."""
    from .field import field_from_canonical
    body, _, ftext = text.partition("@")
    if spec is None:
        spec = field_from_canonical(ftext)
    elif ftext and ftext != spec.canonical():
        raise SpecMismatch(f"polynomial field {ftext} differs from {spec.canonical()}")
    inner = body.strip()[1:-1]
    packed = [int(v) for v in inner.split(",")] if inner else []
    return Polynomial.from_packed(spec, packed)


# module-level aliases matching the operation names used in reports and docs

def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    return f.squarefree_decomposition()


def distinct_degree_factorization(f: Polynomial) -> list[tuple[int, Polynomial]]:
    return f.distinct_degree_factorization()


def degree_profile(f: Polynomial) -> FactorDegreeProfile:
    return f.degree_profile()


def is_irreducible(f: Polynomial) -> bool:
    return f.is_irreducible()


# -- univariate resultant (used as an oracle hook and by small checks) ----------

def resultant(f: Polynomial, g: Polynomial) -> FieldElement:
    """Res(f, g) over the coefficient field, by the Euclidean recurrence."""
    if f.spec != g.spec:
        raise SpecMismatch("resultant of polynomials over different fields")
    spec = f.spec
    k = spec.kernel
    a, b = list(f.packed), list(g.packed)
    if not a or not b:
        return FieldElement(spec, 0)
    acc = 1
    sign = 1
    while len(b) - 1 > 0:
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            a, b = b, a
            if da % 2 == 1 and db % 2 == 1:
                sign = -sign
            continue
        r = k.pmod(a, b)
        if not r:
            return FieldElement(spec, 0)
        dr = len(r) - 1
        acc = k.emul(acc, k.epow(b[-1], da - dr))
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        a, b = b, r
    # deg b == 0
    acc = k.emul(acc, k.epow(b[0], len(a) - 1))
    if sign < 0:
        acc = k.eneg(acc)
    return FieldElement(spec, acc)


# -- resultant in Y over GF(q)[Y] -------------------------------------------------
#
# BivarPoly values are lists of Y-polynomials (each a packed coefficient
# list) indexed by powers of X, with no trailing zero X-coefficients.
# Only the operations needed for the subresultant walk are provided.

class BivarPoly:
    """Polynomial in X over the ring GF(q)[Y]."""

    __slots__ = ("spec", "xcoeffs")

    def __init__(self, spec: FieldSpec, xcoeffs: list[list[int]]):
        while xcoeffs and not xcoeffs[-1]:
            xcoeffs.pop()
        self.spec = spec
        self.xcoeffs = [list(c) for c in xcoeffs]

    @property
    def degree_x(self) -> int:
        return len(self.xcoeffs) - 1

    def lc_x(self) -> list[int]:
        return list(self.xcoeffs[-1]) if self.xcoeffs else []

    def __repr__(self) -> str:
        return f"BivarPoly(deg_x={self.degree_x})"


def _ymul(k, poly: list[list[int]], ycoef: list[int]) -> list[list[int]]:
    return [k.pmul(c, ycoef) for c in poly]


def _yexact_div(k, num: list[int], den: list[int]) -> list[int]:
    q, r = k.pdivrem(num, den)
    if r:
        raise ArithmeticError("inexact division in subresultant sequence")
    return q


def _prem(k, a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Pseudo-remainder of a by b in GF(q)[Y][X]: rem(lc(b)^(da-db+1) * a, b)."""
    da, db = len(a) - 1, len(b) - 1
    d = b[-1]
    e = da - db + 1
    r = [list(c) for c in a]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        new = [k.pmul(c, d) for c in r[:-1]]
        shift = len(r) - 1 - db
        for j, bc in enumerate(b[:-1]):
            idx = shift + j
            new[idx] = k.psub(new[idx], k.pmul(lr, bc))
        while new and not new[-1]:
            new.pop()
        r = new
        e -= 1
    for _ in range(e):
        r = _ymul(k, r, d)
    return r


def resultant_in_y(a: Polynomial, g: Polynomial) -> Polynomial:
    """R(Y) = Res_X(a(X), Y - g(X)) over GF(q).

    R(Y) = lc(a)^deg(g) * prod over the roots of a, with multiplicity, of
    (Y - g(root)); its degree is deg(a).  The returned Polynomial lives
    over the same field with its variable read as Y.
    """
    if a.spec != g.spec:
        raise SpecMismatch("arguments over different fields")
    if a.is_zero():
        raise ZeroInput("resultant against the zero polynomial")
    spec = a.spec
    k = spec.kernel
    # A = a with constant-in-Y coefficients; B = Y - g(X)
    A = [[v] if v else [] for v in a.packed]
    B: list[list[int]] = [[k.eneg(v)] if v else [] for v in g.packed]
    if not B:
        B = [[]]
    B[0] = k.padd(B[0], [0, 1])
    res = _subresultant(spec, BivarPoly(spec, A), BivarPoly(spec, B))
    return Polynomial.from_packed(spec, res)


def _subresultant(spec: FieldSpec, A: BivarPoly, B: BivarPoly) -> list[int]:
    """Res_X(A, B) in GF(q)[Y] by the fraction-free subresultant walk."""
    k = spec.kernel
    a, b = A.xcoeffs, B.xcoeffs
    if not a or not b:
        return []
    sign = 1
    if len(a) - 1 < len(b) - 1:
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            sign = -sign
        a, b = b, a
    if len(b) - 1 == 0:
        out = [1]
        for _ in range(len(a) - 1):
            out = k.pmul(out, b[0])
        return _signed(k, out, sign)
    g: list[int] = [1]
    h: list[int] = [1]
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = _prem(k, a, b)
        a = b
        den = g
        for _ in range(delta):
            den = k.pmul(den, h)
        b = [_yexact_div(k, c, den) for c in r]
        while b and not b[-1]:
            b.pop()
        if not b:
            return []
        g = list(a[-1])
        if delta > 0:
            num = [1]
            for _ in range(delta):
                num = k.pmul(num, g)
            hden = [1]
            for _ in range(delta - 1):
                hden = k.pmul(hden, h)
            h = _yexact_div(k, num, hden)
        if len(b) - 1 == 0:
            break
    dA = len(a) - 1
    num = [1]
    for _ in range(dA):
        num = k.pmul(num, b[0])
    hden = [1]
    for _ in range(dA - 1):
        hden = k.pmul(hden, h)
    out = _yexact_div(k, num, hden)
    return _signed(k, out, sign)


def _signed(k, coeffs: list[int], sign: int) -> list[int]:
    if sign >= 0:
        return coeffs
    return [k.eneg(c) for c in coeffs]
