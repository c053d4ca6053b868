"""Multi-twisted codes and their explicit linear-code realization.

A Lambda-multi-twisted code of block lengths (m_1, ..., m_l) is an
F_q[x]-submodule of the product of the rings F_q[x]/(x^{m_i} - lambda_i).
Codewords are vectorized block by block, each block listing the coefficients
of its component polynomial in ascending degree, so multiplication by x acts
as :func:`twist_shift`.

Block indices are 0-based throughout the Python API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import FieldSpec, Poly, poly_gcd
from .errors import InvalidCode, NotADivisor, ShapeError, TooLargeToEnumerate, ZeroLambda
from .linalg import MatrixFq, null_space, rank, row_basis, row_space_contains

DEFAULT_MAX_ENUM = 2**24
INFINITE = math.inf


@dataclass(frozen=True)
class MTShape:
    spec: FieldSpec
    lambdas: tuple[int, ...]
    block_lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        object.__setattr__(self, "block_lengths", tuple(self.block_lengths))
        if not self.lambdas:
            raise InvalidCode("at least one block is required")
        if len(self.lambdas) != len(self.block_lengths):
            raise InvalidCode(
                f"{len(self.lambdas)} lambdas but {len(self.block_lengths)} block lengths"
            )
        for lam in self.lambdas:
            if not 0 <= lam < self.spec.q:
                raise InvalidCode(f"lambda {lam} outside [0, {self.spec.q})")
            if lam == 0:
                raise ZeroLambda("every lambda must be nonzero")
        for m in self.block_lengths:
            if m < 1:
                raise InvalidCode(f"block length {m} < 1")

    @property
    def ell(self) -> int:
        return len(self.lambdas)

    @property
    def n(self) -> int:
        return sum(self.block_lengths)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for m in self.block_lengths:
            out.append(acc)
            acc += m
        return tuple(out)

    def block_slice(self, i: int) -> slice:
        start = self.offsets[i]
        return slice(start, start + self.block_lengths[i])

    def modulus(self, i: int) -> Poly:
        return Poly.x_pow_minus(self.spec, self.block_lengths[i], self.lambdas[i])

    def moduli(self) -> list[Poly]:
        return [self.modulus(i) for i in range(self.ell)]


@dataclass(frozen=True)
class MTCode:
    """Shape plus generator tuples; components are reduced modulo the moduli."""

    shape: MTShape
    generators: tuple[tuple[Poly, ...], ...] = ()

    def __post_init__(self):
        shape = self.shape
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != shape.ell:
                raise InvalidCode(f"generator has {len(g)} components, expected {shape.ell}")
            comps = []
            for i, f in enumerate(g):
                if not isinstance(f, Poly):
                    f = Poly(shape.spec, f)
                elif f.spec != shape.spec:
                    raise InvalidCode("generator component over a different field")
                comps.append(f % shape.modulus(i))
            gens.append(tuple(comps))
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_coeffs(cls, spec: FieldSpec, lambdas, block_lengths, generators=()) -> "MTCode":
        shape = MTShape(spec, tuple(lambdas), tuple(block_lengths))
        return cls(shape, tuple(tuple(Poly(spec, c) for c in g) for g in generators))

    @property
    def spec(self) -> FieldSpec:
        return self.shape.spec

    @property
    def rho(self) -> int:
        return len(self.generators)

    def vector(self, k: int) -> list[int]:
        """Coefficient vector of generator ``k`` in F_q^n."""
        out = []
        for f, m in zip(self.generators[k], self.shape.block_lengths):
            out.extend(f[j] for j in range(m))
        return out

    def with_generators(self, generators) -> "MTCode":
        return MTCode(self.shape, tuple(generators))


@dataclass(frozen=True)
class LinearCode:
    """An explicit linear code given by its RREF basis (no zero rows)."""

    spec: FieldSpec
    n: int
    basis: MatrixFq

    @classmethod
    def from_rows(cls, spec: FieldSpec, n: int, rows) -> "LinearCode":
        return cls(spec, n, row_basis(MatrixFq(spec, rows, n)))

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> "LinearCode":
        return cls(spec, n, MatrixFq.zeros(spec, 0, n))

    @classmethod
    def full(cls, spec: FieldSpec, n: int) -> "LinearCode":
        return cls(spec, n, MatrixFq.identity(spec, n))

    @property
    def k(self) -> int:
        return self.basis.rows

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.spec == other.spec and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def contains(self, other: "LinearCode") -> bool:
        return row_space_contains(self.basis, other.basis)

    def contains_vector(self, v: Sequence[int]) -> bool:
        return row_space_contains(self.basis, MatrixFq(self.spec, [v], self.n))

    def restrict(self, cols: Sequence[int]) -> "LinearCode":
        """Coordinate projection onto ``cols``."""
        return LinearCode(self.spec, len(cols), row_basis(self.basis.columns(cols)))


@dataclass(frozen=True)
class ConstituentCode:
    """The lambda-constacyclic code of length m generated by ``gen_poly``."""

    spec: FieldSpec
    index: int
    lam: int
    m: int
    gen_poly: Poly

    def __post_init__(self):
        if self.gen_poly.is_zero() or not self.gen_poly.divides(self.modulus):
            raise NotADivisor(
                f"{self.gen_poly.format()} does not divide {self.modulus.format()}"
            )
        object.__setattr__(self, "gen_poly", self.gen_poly.monic())

    @property
    def modulus(self) -> Poly:
        return Poly.x_pow_minus(self.spec, self.m, self.lam)

    @property
    def dimension(self) -> int:
        return self.m - self.gen_poly.degree

    def is_zero(self) -> bool:
        return self.gen_poly.degree == self.m


def twist_shift(v: Sequence[int], shape: MTShape) -> list[int]:
    """Multiply a codeword by x: rotate each block right, scaling the wrap by lambda_i."""
    if len(v) != shape.n:
        raise ShapeError(f"vector of length {len(v)}, shape has n = {shape.n}")
    mul = shape.spec._mul
    out = []
    for i, m in enumerate(shape.block_lengths):
        blk = v[shape.offsets[i]: shape.offsets[i] + m]
        out.append(mul[shape.lambdas[i]][blk[-1]])
        out.extend(blk[:-1])
    return out


def expand(code: MTCode) -> LinearCode:
    """F_q-span of every twist-shift of every generator."""
    shape = code.shape
    rows = []
    for k in range(code.rho):
        v = code.vector(k)
        if not any(v):
            continue
        for _ in range(shape.n):
            rows.append(v)
            v = twist_shift(v, shape)
    return LinearCode.from_rows(shape.spec, shape.n, rows)


def is_twist_closed(C: LinearCode, shape: MTShape) -> bool:
    if C.k == 0:
        return True
    shifted = MatrixFq(C.spec, [twist_shift(list(r), shape) for r in C.basis.entries], C.n)
    return row_space_contains(C.basis, shifted)


def dual(C: LinearCode) -> LinearCode:
    if C.k == 0:
        return LinearCode.full(C.spec, C.n)
    return LinearCode(C.spec, C.n, null_space(C.basis))


def hull(C: LinearCode) -> LinearCode:
    """C intersected with its dual: the kernel of the stacked parity checks."""
    D = dual(C)
    stacked = C.basis.stack(D.basis)
    if stacked.rows == 0:
        return LinearCode.full(C.spec, C.n)
    return LinearCode(C.spec, C.n, null_space(stacked))


def hull_dimension(C: LinearCode) -> int:
    D = dual(C)
    return C.k + D.k - rank(C.basis.stack(D.basis))


def is_lcd_bruteforce(C: LinearCode) -> bool:
    return hull(C).k == 0


def _gray_steps(radix: int, length: int):
    """Reflected mixed-radix Gray code: yields (digit, old, new), one digit per step."""
    digits = [0] * length
    dirs = [1] * length
    while True:
        j = 0
        while j < length:
            nd = digits[j] + dirs[j]
            if 0 <= nd < radix:
                break
            dirs[j] = -dirs[j]
            j += 1
        if j == length:
            return
        old = digits[j]
        digits[j] = nd
        yield j, old, nd


_BLOCK_TARGET = 4096


def min_distance(C: LinearCode, max_enum: int = DEFAULT_MAX_ENUM) -> int | float:
    """Exact minimum Hamming weight by full enumeration; INFINITE for the zero code.

    The low rows are expanded into a table of all their combinations; the high
    rows are walked in Gray-code order so each step adds one scaled row.
    """
    k = C.k
    if k == 0:
        return INFINITE
    spec = C.spec
    q = spec.q
    total = q**k
    if total > max_enum:
        raise TooLargeToEnumerate(total, max_enum)
    addT = np.array(spec._add, dtype=np.int16)
    mulT = np.array(spec._mul, dtype=np.int16)
    subT = np.array([[spec.sub(a, b) for b in range(q)] for a in range(q)], dtype=np.int16)
    G = np.array(C.basis.entries, dtype=np.int16)

    a = 1
    while a < k and q ** (a + 1) <= _BLOCK_TARGET:
        a += 1
    low = np.zeros((1, C.n), dtype=np.int16)
    for r in range(a):
        parts = [low] + [addT[low, mulT[c, G[r]][None, :]] for c in range(1, q)]
        low = np.concatenate(parts, axis=0)
    weights = np.count_nonzero(low, axis=1)
    best = int(weights[1:].min())
    if best == 1:
        return 1
    H = np.zeros(C.n, dtype=np.int16)
    for j, old, new in _gray_steps(q, k - a):
        diff = subT[new, old]
        H = addT[H, mulT[diff, G[a + j]]]
        w = int(np.count_nonzero(addT[low, H[None, :]], axis=1).min())
        if w < best:
            best = w
            if best == 1:
                break
    return best


def project(code: MTCode, i: int) -> ConstituentCode:
    """Constituent generator gcd(x^{m_i} - lambda_i, pi_i(g_1), ..., pi_i(g_rho))."""
    shape = code.shape
    if not 0 <= i < shape.ell:
        raise IndexError(f"block index {i} out of range for {shape.ell} blocks")
    g = poly_gcd(shape.modulus(i), *(gen[i] for gen in code.generators))
    return ConstituentCode(shape.spec, i, shape.lambdas[i], shape.block_lengths[i], g)


def constituent_generator_matrix(cc: ConstituentCode) -> MatrixFq:
    """Rows x^j * g for 0 <= j < m - deg g (empty for the zero constituent)."""
    g = cc.gen_poly
    rows = []
    for j in range(cc.dimension):
        rows.append([g[t - j] if t >= j else 0 for t in range(cc.m)])
    return MatrixFq(cc.spec, rows, cc.m)


def constituent_expand(cc: ConstituentCode) -> LinearCode:
    return LinearCode(cc.spec, cc.m, row_basis(constituent_generator_matrix(cc)))


def block_projection(C: LinearCode, shape: MTShape, i: int) -> LinearCode:
    """Coordinate projection of an explicit code onto block ``i``."""
    return C.restrict(list(range(shape.n))[shape.block_slice(i)])
