"""Exact arithmetic in F_q = F_p[t]/(modulus) and in F_q[x].

Field elements are plain integers in ``[0, q)``: the base-p digits of an
element's code are the coefficients (ascending) of its residue polynomial.
Every :class:`FieldSpec` precomputes addition, multiplication and inversion
tables on first use, so elementwise arithmetic is a pair of list lookups.

Polynomials over F_q are immutable :class:`Poly` objects holding a tuple of
element codes in ascending degree with no trailing zeros.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import (
    DivisionByZero,
    FieldMismatch,
    ReciprocalUndefined,
    UndefinedGcd,
)

MAX_FIELD_ORDER = 256


class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash("MINUS_INFINITY")

    def __reduce__(self):
        return (_MinusInfinity, ())


MINUS_INFINITY = _MinusInfinity()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise ValueError."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not is_prime(p):
                break
            return p, e
    raise ValueError(f"{q} is not a prime power")


# -- polynomials over the prime field, used only to build extension fields --

def _fp_mod(a: list[int], b: Sequence[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible_fp(coeffs: Sequence[int], p: int) -> bool:
    """Exhaustive factor search: no monic factor of degree <= deg/2 divides."""
    coeffs = [c % p for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _fp_mod(coeffs, list(low) + [1], p):
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lowest irreducible monic degree-e polynomial over F_p.

    Candidates are ordered by the integer whose base-p digits are the
    non-leading coefficients, so the x^(e-1) coefficient is most significant.
    """
    for code in range(p**e):
        low = [(code // p**j) % p for j in range(e)]
        cand = tuple(low) + (1,)
        if is_irreducible_fp(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {e} over F_{p}")


def _digits(code: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _undigits(digits: Sequence[int], p: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * p + d
    return code


@functools.lru_cache(maxsize=None)
def _tables(p: int, e: int, modulus: Optional[tuple[int, ...]]):
    q = p**e
    if e == 1:
        add = [[(a + b) % p for b in range(q)] for a in range(q)]
        mul = [[(a * b) % p for b in range(q)] for a in range(q)]
    else:
        digits = [_digits(c, p, e) for c in range(q)]
        add = [
            [_undigits([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q)]
            for a in range(q)
        ]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(digits[a]):
                    if x:
                        for j, y in enumerate(digits[b]):
                            prod[i + j] = (prod[i + j] + x * y) % p
                r = _fp_mod(prod, modulus, p)
                r += [0] * (e - len(r))
                mul[a][b] = mul[b][a] = _undigits(r, p)
    neg = [0] * q
    inv = [0] * q
    for a in range(q):
        neg[a] = add[a].index(0)
        if a:
            inv[a] = mul[a].index(1)
    return (
        tuple(tuple(r) for r in add),
        tuple(tuple(r) for r in mul),
        tuple(neg),
        tuple(inv),
    )


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_q with q = p**e.

    ``modulus`` is the ascending coefficient vector of the monic irreducible
    polynomial defining the extension; it is ``None`` for prime fields and
    defaults to :func:`default_modulus` otherwise.
    """

    p: int
    e: int = 1
    modulus: Optional[tuple[int, ...]] = None
    _add: tuple = field(default=(), init=False, repr=False, compare=False)
    _mul: tuple = field(default=(), init=False, repr=False, compare=False)
    _neg: tuple = field(default=(), init=False, repr=False, compare=False)
    _inv: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.e < 1:
            raise ValueError("extension degree must be >= 1")
        if self.p**self.e > MAX_FIELD_ORDER:
            raise ValueError(f"field order {self.p ** self.e} exceeds cap {MAX_FIELD_ORDER}")
        if self.e == 1:
            if self.modulus is not None:
                raise ValueError("prime fields take no modulus")
        else:
            mod = default_modulus(self.p, self.e) if self.modulus is None else tuple(self.modulus)
            if len(mod) != self.e + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {self.e}")
            if any(not 0 <= c < self.p for c in mod):
                raise ValueError(f"modulus coefficients must lie in [0, {self.p})")
            if not is_irreducible_fp(mod, self.p):
                raise ValueError(f"modulus {list(mod)} is reducible over F_{self.p}")
            object.__setattr__(self, "modulus", mod)
        add, mul, neg, inv = _tables(self.p, self.e, self.modulus)
        object.__setattr__(self, "_add", add)
        object.__setattr__(self, "_mul", mul)
        object.__setattr__(self, "_neg", neg)
        object.__setattr__(self, "_inv", inv)

    @classmethod
    def of_order(cls, q: int, modulus: Optional[Sequence[int]] = None) -> "FieldSpec":
        p, e = prime_power(q)
        return cls(p, e, None if modulus is None else tuple(modulus))

    @property
    def q(self) -> int:
        return self.p**self.e

    def __reduce__(self):
        return (FieldSpec, (self.p, self.e, self.modulus))

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = 1
        while k:
            if k & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            k >>= 1
        return r

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.spec.q:
            raise ValueError(f"element code {self.code} outside [0, {self.spec.q})")

    def _check(self, other: "FieldElement") -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise FieldMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other):
        return field_add(self, other)

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.spec, self.spec.sub(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.code))

    def __mul__(self, other):
        return field_mul(self, other)

    def inverse(self):
        return field_inv(self)

    def __int__(self):
        return self.code


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.spec, a.spec.add(a.code, b.code))


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement(a.spec, a.spec.mul(a.code, b.code))


def field_inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.inv(a.code))


class Poly:
    """Immutable polynomial over F_q, coefficients ascending."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        q = spec.q
        for c in cs:
            if not 0 <= c < q:
                raise ValueError(f"coefficient {c} outside [0, {q})")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.spec, self.coeffs))

    @classmethod
    def _raw(cls, spec: FieldSpec, cs: list[int]) -> "Poly":
        while cs and cs[-1] == 0:
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "spec", spec)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls._raw(spec, [])

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls._raw(spec, [1])

    @classmethod
    def constant(cls, spec: FieldSpec, c: int) -> "Poly":
        return cls(spec, [c])

    @classmethod
    def monomial(cls, spec: FieldSpec, k: int, c: int = 1) -> "Poly":
        return cls(spec, [0] * k + [c])

    @classmethod
    def x_pow_minus(cls, spec: FieldSpec, m: int, lam: int) -> "Poly":
        """The modulus x^m - lam."""
        cs = [0] * (m + 1)
        cs[m] = 1
        cs[0] = spec.sub(cs[0], lam)
        return cls._raw(spec, cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec.p, self.spec.e, self.coeffs))

    def _check(self, other: "Poly") -> None:
        if self.spec is not other.spec and self.spec != other.spec:
            raise FieldMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        add = self.spec._add
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, y in enumerate(b):
            cs[i] = add[cs[i]][y]
        return Poly._raw(self.spec, cs)

    def __neg__(self) -> "Poly":
        neg = self.spec._neg
        return Poly._raw(self.spec, [neg[c] for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly.zero(self.spec)
        row = self.spec._mul[c]
        return Poly._raw(self.spec, [row[a] for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly._raw(self.spec, [0] * k + list(self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.spec)
        add, mul = self.spec._add, self.spec._mul
        cs = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    if y:
                        cs[i + j] = add[cs[i + j]][row[y]]
        return Poly._raw(self.spec, cs)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        spec = self.spec
        add, mul, neg = spec._add, spec._mul, spec._neg
        b = other.coeffs
        db = len(b) - 1
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return Poly.zero(spec), self
        inv_lead = spec._inv[b[-1]]
        quot = [0] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c == 0:
                continue
            t = mul[c][inv_lead]
            quot[k - db] = t
            nt = neg[t]
            row = mul[nt]
            for j in range(db + 1):
                r[k - db + j] = add[r[k - db + j]][row[b[j]]]
        return Poly._raw(spec, quot), Poly._raw(spec, r[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True iff ``self`` divides ``other``."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(self.spec._inv[self.coeffs[-1]])

    def __call__(self, a: int) -> int:
        add, mul = self.spec._add, self.spec._mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = add[mul[acc][a]][c]
        return acc

    def __repr__(self):
        return f"Poly({self.format()})"

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    return divmod(f, g)


def _gcd2(f: Poly, g: Poly) -> Poly:
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_gcd(*polys: Poly) -> Poly:
    """Monic gcd of one or more polynomials, not all zero."""
    if not polys or all(f.is_zero() for f in polys):
        raise UndefinedGcd("gcd of zero polynomials is undefined")
    return functools.reduce(_gcd2, polys).monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly.zero(f.spec)
    return (f * g // poly_gcd(f, g)).monic()


def reciprocal(f: Poly) -> Poly:
    """Monic normalization of x^deg(f) * f(1/x)."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ReciprocalUndefined(f"reciprocal undefined for {f.format()}")
    return Poly._raw(f.spec, list(reversed(f.coeffs))).monic()


def is_self_reciprocal(f: Poly) -> bool:
    return reciprocal(f) == f.monic()
