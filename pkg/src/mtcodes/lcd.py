"""LCD criteria for constacyclic and multi-twisted codes.

A lambda-constacyclic code with lambda^2 != 1 is always LCD, since its hull is
both lambda- and lambda^{-1}-constacyclic.  For lambda = +-1 the code is LCD
exactly when its generator is self-reciprocal and coprime to its cofactor.
Under pairwise coprime cofactors an MT code is LCD iff every constituent is,
which gives the block-wise criteria below.  Every verdict carries the hull
computation alongside so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .algebra import Poly, is_self_reciprocal, poly_gcd, reciprocal
from .decomp import cofactor, is_decomposable
from .errors import CriterionMismatch, InternalInvariantViolation, NotADivisor
from .mtcode import MTCode, expand, is_lcd_bruteforce, project


class _NotApplicable:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotApplicable"

    def __bool__(self):
        raise TypeError("NotApplicable has no truth value")

    def __reduce__(self):
        return (_NotApplicable, ())


NOT_APPLICABLE = _NotApplicable()


def _cofactor_of(g: Poly, m: int, lam: int) -> Poly:
    mod = Poly.x_pow_minus(g.spec, m, lam)
    if g.is_zero():
        raise NotADivisor("zero polynomial")
    quo, rem = divmod(mod, g)
    if not rem.is_zero():
        raise NotADivisor(f"{g.format()} does not divide {mod.format()}")
    return quo


def constacyclic_dual_generator(g: Poly, m: int, lam: int) -> Poly:
    """Generator of the dual code: the monic reciprocal of (x^m - lam) / g."""
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    return reciprocal(_cofactor_of(g, m, lam))


def constacyclic_is_lcd(g: Poly, m: int, lam: int) -> bool:
    h = _cofactor_of(g, m, lam)
    spec = g.spec
    if spec.mul(lam, lam) != 1:
        return True
    g = g.monic()
    if g.coeffs[0] == 0:
        raise InternalInvariantViolation("divisor of x^m - lambda with zero constant term")
    return is_self_reciprocal(g) and poly_gcd(g, h).is_one()


@dataclass
class BlockRecord:
    index: int
    unit_square_is_one: bool
    self_reciprocal: bool
    gcd_with_cofactor: Poly


@dataclass
class LcdVerdict:
    by_criterion: Union[bool, _NotApplicable]
    by_hull: bool
    per_block: list[BlockRecord] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.by_criterion is NOT_APPLICABLE or self.by_criterion == self.by_hull


def block_records(code: MTCode) -> list[BlockRecord]:
    spec = code.spec
    out = []
    for i in range(code.shape.ell):
        g = project(code, i).gen_poly
        h = cofactor(code, i)
        lam = code.shape.lambdas[i]
        out.append(
            BlockRecord(i, spec.mul(lam, lam) == 1, is_self_reciprocal(g), poly_gcd(g, h))
        )
    return out


def mt_is_lcd_theorem9(code: MTCode) -> LcdVerdict:
    """Block-wise criterion over the blocks with lambda_i^2 = 1."""
    records = block_records(code)
    by_hull = is_lcd_bruteforce(expand(code))
    ok, _ = is_decomposable(code)
    if not ok:
        return LcdVerdict(NOT_APPLICABLE, by_hull, records)
    crit = all(
        r.self_reciprocal and r.gcd_with_cofactor.is_one()
        for r in records
        if r.unit_square_is_one
    )
    return LcdVerdict(crit, by_hull, records)


def corollary8_applies(code: MTCode) -> bool:
    spec = code.spec
    if any(spec.mul(lam, lam) == 1 for lam in code.shape.lambdas):
        return False
    return is_decomposable(code)[0]


def mt_is_lcd_corollary8(code: MTCode):
    """True when every lambda_i != lambda_i^{-1} and the cofactors are coprime.

    Returns NOT_APPLICABLE outside that hypothesis.  When applicable the hull
    oracle is consulted and a disagreement raises CriterionMismatch.
    """
    if not corollary8_applies(code):
        return NOT_APPLICABLE
    if not is_lcd_bruteforce(expand(code)):
        raise CriterionMismatch("hull oracle contradicts the lambda != lambda^-1 criterion")
    return True
