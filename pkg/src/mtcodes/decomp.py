"""Direct-sum decomposition of MT codes into constacyclic constituents.

When the cofactors h_i = (x^{m_i} - lambda_i) / g_i are pairwise coprime, the
code equals the direct sum of its block projections and so does its dual.
Nothing here takes that for granted: :func:`verify_direct_sum` and
:func:`verify_dual_direct_sum` recompute both sides and compare row spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .algebra import Poly, poly_gcd
from .errors import (
    InternalInvariantViolation,
    NotApplicableError,
    PreconditionViolated,
    TooLargeToEnumerate,
)
from .linalg import MatrixFq, row_space_contains, row_space_equal
from .mtcode import (
    DEFAULT_MAX_ENUM,
    INFINITE,
    ConstituentCode,
    MTCode,
    constituent_expand,
    constituent_generator_matrix,
    dual,
    expand,
    is_lcd_bruteforce,
    min_distance,
    project,
)


def cofactor(code: MTCode, i: int) -> Poly:
    """Exact quotient (x^{m_i} - lambda_i) / g_i(x)."""
    g = project(code, i).gen_poly
    quo, rem = divmod(code.shape.modulus(i), g)
    if not rem.is_zero():
        raise InternalInvariantViolation(f"g_{i} does not divide its modulus")
    return quo.monic()


def cofactors(code: MTCode) -> list[Poly]:
    return [cofactor(code, i) for i in range(code.shape.ell)]


def is_decomposable(code: MTCode) -> tuple[bool, dict[tuple[int, int], Poly]]:
    """Pairwise coprimality of the cofactors, with the failing gcds as witnesses."""
    hs = cofactors(code)
    witnesses = {}
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            g = poly_gcd(hs[i], hs[j])
            if not g.is_one():
                witnesses[(i, j)] = g
    return not witnesses, witnesses


def _block_diag(blocks: list[MatrixFq], spec, n: int) -> MatrixFq:
    rows = []
    offset = 0
    for B in blocks:
        for r in B.entries:
            rows.append([0] * offset + list(r) + [0] * (n - offset - B.cols))
        offset += B.cols
    return MatrixFq(spec, rows, n)


def block_diag_generator(code: MTCode) -> MatrixFq:
    """Constituent generator matrices G_i placed on the block diagonal."""
    blocks = [constituent_generator_matrix(project(code, i)) for i in range(code.shape.ell)]
    return _block_diag(blocks, code.spec, code.shape.n)


def _require_decomposable(code: MTCode) -> None:
    ok, witnesses = is_decomposable(code)
    if not ok:
        pairs = ", ".join(f"({i},{j})" for i, j in witnesses)
        raise PreconditionViolated(f"cofactors not pairwise coprime at {pairs}")


def contains_expansion(code: MTCode) -> bool:
    """C is always contained in the direct sum of its projections."""
    return row_space_contains(block_diag_generator(code), expand(code).basis)


def verify_direct_sum(code: MTCode) -> bool:
    _require_decomposable(code)
    C = expand(code)
    G = block_diag_generator(code)
    dims = sum(project(code, i).dimension for i in range(code.shape.ell))
    return dims == C.k and row_space_equal(G, C.basis)


def constituent_dual(cc: ConstituentCode) -> ConstituentCode:
    from .lcd import constacyclic_dual_generator

    lam_inv = cc.spec.inv(cc.lam)
    return ConstituentCode(
        cc.spec, cc.index, lam_inv, cc.m, constacyclic_dual_generator(cc.gen_poly, cc.m, cc.lam)
    )


def verify_dual_direct_sum(code: MTCode) -> bool:
    _require_decomposable(code)
    D = dual(expand(code))
    blocks = [
        constituent_generator_matrix(constituent_dual(project(code, i)))
        for i in range(code.shape.ell)
    ]
    G = _block_diag(blocks, code.spec, code.shape.n)
    return G.rows == D.k and row_space_equal(G, D.basis)


class DistanceRule(NamedTuple):
    d: int | float
    constituent_ds: tuple
    rule_holds: bool


def distance_min_rule(code: MTCode, max_enum: int = DEFAULT_MAX_ENUM) -> DistanceRule:
    """d(C) by enumeration against the minimum over nonzero constituents."""
    _require_decomposable(code)
    d = min_distance(expand(code), max_enum)
    ds = tuple(
        min_distance(constituent_expand(project(code, i)), max_enum)
        for i in range(code.shape.ell)
    )
    # zero constituents report INFINITE and drop out of the minimum
    return DistanceRule(d, ds, d == min(ds, default=INFINITE))


class Thresholds(NamedTuple):
    S: int | float
    S_blocks: tuple
    holds: bool


def security_report(code: MTCode, max_enum: int = DEFAULT_MAX_ENUM) -> Thresholds:
    """Masking thresholds S = d(C) and S_i = d(pi_i(C)) of an LCD decomposable code."""
    ok, _ = is_decomposable(code)
    if not ok:
        raise NotApplicableError("thresholds need pairwise coprime cofactors")
    if not is_lcd_bruteforce(expand(code)):
        raise NotApplicableError("thresholds are defined for LCD codes only")
    rule = distance_min_rule(code, max_enum)
    return Thresholds(rule.d, rule.constituent_ds, rule.rule_holds)


@dataclass
class ConstituentInfo:
    index: int
    gen_poly: Poly
    cofactor: Poly
    dimension: int
    distance: Optional[int | float] = None


@dataclass
class DecompositionReport:
    decomposable: bool
    constituents: list[ConstituentInfo]
    witnesses: dict[tuple[int, int], Poly] = field(default_factory=dict)
    code_distance: Optional[int | float] = None
    thresholds: Optional[Thresholds] = None
    direct_sum_holds: Optional[bool] = None
    dual_direct_sum_holds: Optional[bool] = None
    distance_rule_holds: Optional[bool] = None

    def failures(self) -> list[str]:
        """Names of the checks that contradicted the decomposition theorem."""
        out = []
        for name in ("direct_sum_holds", "dual_direct_sum_holds", "distance_rule_holds"):
            if getattr(self, name) is False:
                out.append(name)
        if self.thresholds is not None and not self.thresholds.holds:
            out.append("thresholds")
        return out


def decompose(code: MTCode, max_enum: int = DEFAULT_MAX_ENUM) -> DecompositionReport:
    ok, witnesses = is_decomposable(code)
    infos = []
    for i in range(code.shape.ell):
        cc = project(code, i)
        h = cofactor(code, i)
        if not (cc.gen_poly * h).monic() == code.shape.modulus(i):
            raise InternalInvariantViolation(f"g_{i} * h_{i} != modulus")
        info = ConstituentInfo(i, cc.gen_poly, h, cc.dimension)
        try:
            info.distance = min_distance(constituent_expand(cc), max_enum)
        except TooLargeToEnumerate:
            pass
        infos.append(info)
    report = DecompositionReport(ok, infos, witnesses)
    C = expand(code)
    try:
        report.code_distance = min_distance(C, max_enum)
    except TooLargeToEnumerate:
        pass
    if ok:
        report.direct_sum_holds = verify_direct_sum(code)
        report.dual_direct_sum_holds = verify_dual_direct_sum(code)
        ds = [c.distance for c in infos]
        if report.code_distance is not None and None not in ds:
            report.distance_rule_holds = report.code_distance == min(ds, default=INFINITE)
            if is_lcd_bruteforce(C):
                report.thresholds = Thresholds(
                    report.code_distance, tuple(ds), report.distance_rule_holds
                )
    return report
