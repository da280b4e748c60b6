"""Finite fields GF(p^m) with Frobenius and subfield embeddings.

A field is described by a FieldSpec: characteristic p, extension degree m
over the prime field, and a monic irreducible modulus of degree m over
GF(p).  Every field is represented directly over its prime field, so
GF(q^d) with q = p^a is GF(p^(a*d)); moving between GF(q) and GF(q^d)
goes through an explicit Embedding computed once, not through towers.

Elements are integers in [0, p^m) packing the coefficient vector of the
element in the generator u, little-endian base p.  Enumeration order,
report serialization and resume indices all use this packing.
"""

from __future__ import annotations

import random
from typing import Iterator

from . import backend
from .backend.pure import PureKernel
from .errors import (
    EmbeddingFailure,
    IncompatibleFields,
    NotPrime,
    OutOfRange,
    ReducibleModulus,
    SpecMismatch,
)
from .intutil import is_prime

_MAX_P = 2 ** 31
_SEARCH_TRIES = 5000


class FieldSpec:
    """Immutable description of GF(p^m) plus its arithmetic kernel.

    Equality and hashing use (p, m, modulus) only, so two specs built with
    different backends compare equal and their elements interoperate.
    """

    __slots__ = ("p", "m", "modulus", "order", "kernel", "_backend")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], backend_name: str | None = None):
        self.p = p
        self.m = m
        self.modulus = tuple(int(c) % p for c in modulus)
        self.order = p ** m
        self.kernel = backend.get_kernel(p, m, self.modulus, backend_name)
        self._backend = backend_name

    # construction goes through field_create, which validates; __reduce__
    # rebuilds through it so unpickling in worker processes revalidates too
    def __reduce__(self):
        return (field_create, (self.p, self.m, self.modulus, 0, self._backend))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def canonical(self) -> str:
        mods = ",".join(str(c) for c in self.modulus)
        return f"p={self.p};m={self.m};modulus=[{mods}]"

    # -- element construction --------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.order:
            raise OutOfRange(f"packed value {value} outside [0, {self.order})")
        return FieldElement(self, value)

    def from_coeffs(self, coeffs) -> "FieldElement":
        digits = [int(c) % self.p for c in coeffs]
        if len(digits) > self.m:
            raise OutOfRange(f"{len(digits)} coefficients for extension degree {self.m}")
        digits += [0] * (self.m - len(digits))
        return FieldElement(self, self.kernel.pack(digits))

    def from_int(self, n: int) -> "FieldElement":
        """Prime-subfield constant n mod p."""
        return FieldElement(self, n % self.p)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        """The generator u (the residue of X modulo the modulus)."""
        return FieldElement(self, self.p % self.order)

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements in lexicographic coefficient order."""
        for v in range(self.order):
            yield FieldElement(self, v)

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(self, rng.randrange(self.order))


class FieldElement:
    """Value-type element of a FieldSpec; arithmetic via operators.

    Integer operands are coerced as prime-subfield constants (reduced mod
    p).  Mixing elements of different specs is a hard error.
    """

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        self.spec = spec
        self.val = val

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.spec.kernel.unpack(self.val))

    def _coerce(self, other) -> int | None:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other.val
        if isinstance(other, int):
            return other % self.spec.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.kernel.eadd(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.kernel.esub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.kernel.esub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.kernel.emul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.kernel.ediv(self.val, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.spec, self.spec.kernel.ediv(v, self.val))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.kernel.epow(self.val, e))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.kernel.eneg(self.val))

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.kernel.einv(self.val))

    def frobenius(self, k: int = 1) -> "FieldElement":
        """a^(p^k)."""
        return FieldElement(self.spec, self.spec.kernel.epow(self.val, self.spec.p ** k))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.spec.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.val))

    def __bool__(self) -> bool:
        return self.val != 0

    def __repr__(self) -> str:
        return f"{self}"

    def __str__(self) -> str:
        if self.spec.m == 1:
            return str(self.val)
        terms = []
        for i in range(self.spec.m - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}u" if i == 1 else f"{head}u^{i}")
        return "+".join(terms) if terms else "0"

    def __reduce__(self):
        return (FieldElement, (self.spec, self.val))


class Embedding:
    """Injective ring morphism GF(p^a) -> GF(p^(a*d)) fixing GF(p).

    Determined by the image of the source generator, a root of the source
    modulus in the target; applying the embedding is Horner evaluation of
    the coefficient vector at that root.
    """

    __slots__ = ("source", "target", "image_of_generator", "_powers")

    def __init__(self, source: FieldSpec, target: FieldSpec, image_of_generator: FieldElement):
        self.source = source
        self.target = target
        self.image_of_generator = image_of_generator
        k = target.kernel
        check = k.peval([c % target.p for c in source.modulus], image_of_generator.val)
        if check != 0:
            raise EmbeddingFailure("generator image is not a root of the source modulus")
        pw, acc = [1], 1
        for _ in range(source.m - 1):
            acc = k.emul(acc, image_of_generator.val)
            pw.append(acc)
        self._powers = tuple(pw)

    def __call__(self, a: FieldElement) -> FieldElement:
        if a.spec != self.source:
            raise SpecMismatch("element does not belong to the embedding source")
        return FieldElement(self.target, self.map_packed(a.val))

    def map_packed(self, val: int) -> int:
        k = self.target.kernel
        digits = self.source.kernel.unpack(val)
        acc = 0
        for c, pw in zip(digits, self._powers):
            if c:
                acc = k.eadd(acc, k.emul(c, pw))
        return acc

    def __repr__(self) -> str:
        return f"Embedding({self.source!r} -> {self.target!r})"


def field_create(p: int, m: int = 1, modulus=None, seed: int = 0,
                 backend_name: str | None = None) -> FieldSpec:
    """Build GF(p^m), finding a monic irreducible modulus if none is given.

    The modulus search draws random monic candidates from a generator
    seeded by (p, m, seed) and keeps the first that passes the Rabin
    irreducibility test, so the result is deterministic per seed.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise OutOfRange(f"extension degree must be positive, got {m}")
    if p >= _MAX_P:
        raise OutOfRange(f"characteristic above documented limit 2^31: {p}")
    base = PureKernel(p, 1, (0, 1))
    if modulus is not None:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {m}")
        if m > 1 and not base.is_irreducible(list(mod)):
            raise ReducibleModulus(f"modulus {list(mod)} factors over GF({p})")
        return FieldSpec(p, m, mod, backend_name)
    if m == 1:
        return FieldSpec(p, 1, (0, 1), backend_name)
    rng = random.Random(f"unipoly:modulus:{p}:{m}:{seed}")
    for _ in range(_SEARCH_TRIES * m):
        cand = [rng.randrange(p) for _ in range(m)] + [1]
        if base.is_irreducible(cand):
            return FieldSpec(p, m, tuple(cand), backend_name)
    raise RuntimeError(f"no irreducible modulus found for GF({p}^{m})")


def field_from_canonical(text: str, backend_name: str | None = None) -> FieldSpec:
    """Parse the canonical form "p=..;m=..;modulus=[c0,c1,...]"."""
    try:
        parts = dict(item.split("=", 1) for item in text.strip().split(";"))
        p = int(parts["p"])
        m = int(parts["m"])
        inner = parts["modulus"].strip()[1:-1]
        mod = tuple(int(c) for c in inner.split(",")) if inner else ()
    except (KeyError, ValueError, IndexError) as exc:
        raise ValueError(f"bad field text {text!r}") from exc
    return field_create(p, m, mod, backend_name=backend_name)


def find_roots(spec: FieldSpec, coeffs: list[int]) -> list[int]:
    """All roots in spec of a polynomial given as packed coefficients.

    Splits gcd(X^Q - X, f) down to linear factors by seeded equal-degree
    splitting; the returned list is sorted, so callers get a canonical
    root independent of the splitting randomness.
    """
    k = spec.kernel
    f = k.monic(list(coeffs))
    if len(f) <= 1:
        return []
    x = [0, 1]
    xq = k.ppowmod(x, spec.order, f)
    g = k.pgcd(k.psub(xq, x), f)
    rng = random.Random(f"unipoly:roots:{spec.canonical()}:{tuple(f)}")
    roots: list[int] = []
    _split_linear(spec, g, rng, roots)
    roots.sort()
    return roots


def _split_linear(spec: FieldSpec, g: list[int], rng: random.Random, out: list[int]) -> None:
    k = spec.kernel
    if len(g) <= 1:
        return
    if len(g) == 2:
        out.append(k.eneg(k.ediv(g[0], g[1])))
        return
    q = spec.order
    for _ in range(256 * len(g)):
        delta = rng.randrange(q)
        if spec.p == 2:
            if delta == 0:
                continue
            t = k.pmod([0, delta], g)
            acc = list(t)
            for _ in range(spec.m - 1):
                t = k.pmod(k.pmul(t, t), g)
                acc = k.padd(acc, t)
            w = k.pgcd(acc, g)
        else:
            h = k.ppowmod([delta, 1], (q - 1) // 2, g)
            w = k.pgcd(k.psub(h, [1]), g)
        if 0 < len(w) - 1 < len(g) - 1:
            _split_linear(spec, w, rng, out)
            _split_linear(spec, k.pdivrem(g, w)[0], rng, out)
            return
    raise EmbeddingFailure("equal-degree splitting failed to make progress")


def embed_field(source: FieldSpec, target: FieldSpec) -> Embedding:
    """Embedding of source into target; requires same p and source.m | target.m.

    The generator image is the smallest root (in packed order) of the
    source modulus in the target, making the embedding canonical for a
    given pair of specs.
    """
    if source.p != target.p:
        raise IncompatibleFields(f"different characteristics {source.p} and {target.p}")
    if target.m % source.m != 0:
        raise IncompatibleFields(f"{source.m} does not divide {target.m}")
    if source == target:
        return Embedding(source, target, target.gen())
    lifted = [c % target.p for c in source.modulus]
    roots = find_roots(target, lifted)
    if not roots:
        raise EmbeddingFailure(
            f"source modulus has no root in {target!r}; target modulus suspect")
    return Embedding(source, target, FieldElement(target, roots[0]))
