"""Three independent ways to compute the dimension of an MT code.

* rank: rank of the explicit generator matrix over F_q (the definition);
* minors: n - deg gcd of all l x l minors of the stacked (rho + l) x l matrix
  of generator tuples and moduli;
* hnf: n - sum of the diagonal degrees of a triangular basis of the same
  row module.

The last two are formulas, and the report compares them against the first on
every call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import Poly
from .errors import MTCodeError
from .linalg import (
    DEFAULT_MAX_MINORS,
    PolyMatrix,
    diagonal,
    hnf_triangularize,
    minor_count,
    minors_gcd,
)
from .mtcode import MTCode, expand


def dim_rank(code: MTCode) -> int:
    return expand(code).k


def stacked_matrix(code: MTCode) -> PolyMatrix:
    """Generator tuples on top of diag(x^{m_i} - lambda_i)."""
    shape = code.shape
    ell = shape.ell
    zero = Poly.zero(shape.spec)
    rows = [list(g) for g in code.generators]
    for i, mod in enumerate(shape.moduli()):
        rows.append([mod if j == i else zero for j in range(ell)])
    return PolyMatrix(shape.spec, rows, ell)


def dim_minors(code: MTCode, max_minors: int = DEFAULT_MAX_MINORS) -> int:
    return code.shape.n - minors_gcd(stacked_matrix(code), code.shape.ell, max_minors).degree


def dim_hnf(code: MTCode) -> int:
    tri = hnf_triangularize(stacked_matrix(code))
    return code.shape.n - sum(d.degree for d in diagonal(tri))


@dataclass
class DimensionReport:
    k_rank: Optional[int] = None
    k_minors: Optional[int] = None
    k_hnf: Optional[int] = None
    minor_count: int = 0
    minors_gcd_poly: Optional[Poly] = None
    hnf_diagonal: Optional[list[Poly]] = None
    errors: dict[str, str] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        present = {k for k in (self.k_rank, self.k_minors, self.k_hnf) if k is not None}
        return len(present) <= 1


def dimension_report(code: MTCode, max_minors: int = DEFAULT_MAX_MINORS) -> DimensionReport:
    rep = DimensionReport()
    M = stacked_matrix(code)
    ell = code.shape.ell
    n = code.shape.n
    rep.minor_count = minor_count(M, ell)
    rep.k_rank = dim_rank(code)
    try:
        g = minors_gcd(M, ell, max_minors)
        rep.minors_gcd_poly = g
        rep.k_minors = n - g.degree
    except MTCodeError as exc:
        rep.errors["minors"] = str(exc)
    try:
        tri = hnf_triangularize(M)
        rep.hnf_diagonal = diagonal(tri)
        rep.k_hnf = n - sum(d.degree for d in rep.hnf_diagonal)
    except MTCodeError as exc:
        rep.errors["hnf"] = str(exc)
    return rep
