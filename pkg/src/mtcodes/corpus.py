"""Seeded random MT codes and the invariant checks run over them.

Instance ``i`` of a corpus depends only on ``(seed, i)``, so a corpus can be
split across worker processes and reassembled in index order without changing
any result.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .algebra import FieldSpec, Poly
from .decomp import (
    constituent_dual,
    contains_expansion,
    is_decomposable,
    security_report,
    verify_direct_sum,
    verify_dual_direct_sum,
)
from .dimension import dimension_report, stacked_matrix
from .errors import MTCodeError, TooLargeToEnumerate
from .lcd import constacyclic_is_lcd, corollary8_applies, mt_is_lcd_theorem9
from .linalg import DEFAULT_MAX_MINORS, PolyMatrix, hnf_triangularize, reduces_to_zero
from .mtcode import (
    INFINITE,
    MTCode,
    MTShape,
    block_projection,
    constituent_expand,
    dual,
    expand,
    hull,
    is_lcd_bruteforce,
    is_twist_closed,
    min_distance,
    project,
)


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 500
    seed: int = 0
    q_values: tuple[int, ...] = (2, 3, 4, 5)
    ell_range: tuple[int, int] = (1, 3)
    m_range: tuple[int, int] = (1, 6)
    rho_range: tuple[int, int] = (0, 3)
    decomposable_every: int = 3
    max_attempts: int = 10**4


def _rng(seed: int, index: int) -> random.Random:
    return random.Random(f"mtcodes:{seed}:{index}")


def random_shape(rng: random.Random, cfg: CorpusConfig) -> MTShape:
    spec = FieldSpec.of_order(rng.choice(cfg.q_values))
    ell = rng.randint(*cfg.ell_range)
    ms = tuple(rng.randint(*cfg.m_range) for _ in range(ell))
    lams = tuple(rng.randrange(1, spec.q) for _ in range(ell))
    return MTShape(spec, lams, ms)


def random_code(rng: random.Random, cfg: CorpusConfig, shape: Optional[MTShape] = None) -> MTCode:
    shape = shape or random_shape(rng, cfg)
    q = shape.spec.q
    rho = rng.randint(*cfg.rho_range)
    gens = [
        tuple(Poly(shape.spec, [rng.randrange(q) for _ in range(m)]) for m in shape.block_lengths)
        for _ in range(rho)
    ]
    return MTCode(shape, tuple(gens))


def random_decomposable_code(rng: random.Random, cfg: CorpusConfig) -> MTCode:
    """Rejection sampling: redraw shape and generators until cofactors are coprime."""
    for _ in range(cfg.max_attempts):
        code = random_code(rng, cfg)
        if is_decomposable(code)[0]:
            return code
    raise RuntimeError(f"no decomposable code in {cfg.max_attempts} attempts")


def corpus_instance(cfg: CorpusConfig, index: int) -> MTCode:
    rng = _rng(cfg.seed, index)
    if cfg.decomposable_every and index % cfg.decomposable_every == 0:
        return random_decomposable_code(rng, cfg)
    return random_code(rng, cfg)


def generate_corpus(cfg: CorpusConfig) -> list[MTCode]:
    return [corpus_instance(cfg, i) for i in range(cfg.size)]


PROPERTIES = (
    "dimension_agree",
    "determinantal_degree",
    "hnf_module",
    "twist_closed",
    "dual_involution",
    "hull_symmetric",
    "projection_is_constituent",
    "containment",
    "cofactor_product",
    "constituent_dual",
    "constacyclic_lcd",
    "direct_sum",
    "dual_direct_sum",
    "distance_rule",
    "theorem9",
    "corollary8",
    "thresholds",
)


@dataclass
class InstanceResult:
    index: int
    decomposable: bool
    checks: dict[str, Optional[bool]] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)

    @property
    def failed(self) -> list[str]:
        return [name for name, v in self.checks.items() if v is False]


def check_instance(
    code: MTCode,
    index: int = -1,
    distance_cap: int = 2**16,
    max_minors: int = DEFAULT_MAX_MINORS,
) -> InstanceResult:
    """Run every invariant on one code; ``None`` marks a check that did not apply."""
    shape = code.shape
    ok, _ = is_decomposable(code)
    res = InstanceResult(index, ok)
    checks = res.checks
    C = expand(code)
    D = dual(C)
    ccs = [project(code, i) for i in range(shape.ell)]

    rep = dimension_report(code, max_minors)
    checks["dimension_agree"] = rep.agree and None not in (rep.k_rank, rep.k_minors, rep.k_hnf)
    if rep.minors_gcd_poly is not None and rep.hnf_diagonal is not None:
        checks["determinantal_degree"] = rep.minors_gcd_poly.degree == sum(
            d.degree for d in rep.hnf_diagonal
        )
    else:
        checks["determinantal_degree"] = None
    M = stacked_matrix(code)
    tri = hnf_triangularize(M)
    # the Hermite form is canonical, so output rows lie in the input module
    # iff appending them leaves the form unchanged
    joined = PolyMatrix(M.spec, M.entries + tri.entries, M.cols)
    checks["hnf_module"] = all(reduces_to_zero(r, tri) for r in M.entries) and (
        hnf_triangularize(joined) == tri
    )
    checks["twist_closed"] = is_twist_closed(C, shape)
    checks["dual_involution"] = dual(D) == C and C.k + D.k == shape.n
    H = hull(C)
    checks["hull_symmetric"] = H == hull(D) and C.contains(H) and D.contains(H)
    checks["projection_is_constituent"] = all(
        block_projection(C, shape, i) == constituent_expand(cc) for i, cc in enumerate(ccs)
    )
    checks["containment"] = contains_expansion(code)
    checks["cofactor_product"] = all(
        (cc.gen_poly * (shape.modulus(i) // cc.gen_poly)) == shape.modulus(i)
        for i, cc in enumerate(ccs)
    )
    checks["constituent_dual"] = all(
        constituent_expand(constituent_dual(cc)) == dual(constituent_expand(cc)) for cc in ccs
    )
    checks["constacyclic_lcd"] = all(
        constacyclic_is_lcd(cc.gen_poly, cc.m, cc.lam) == is_lcd_bruteforce(constituent_expand(cc))
        for cc in ccs
    )

    lcd_hull = is_lcd_bruteforce(C)
    for name in ("direct_sum", "dual_direct_sum", "distance_rule", "theorem9", "corollary8", "thresholds"):
        checks[name] = None
    if ok:
        checks["direct_sum"] = verify_direct_sum(code)
        checks["dual_direct_sum"] = verify_dual_direct_sum(code)
        verdict = mt_is_lcd_theorem9(code)
        checks["theorem9"] = verdict.by_criterion == verdict.by_hull
        if corollary8_applies(code):
            checks["corollary8"] = lcd_hull
        q = shape.spec.q
        if q**C.k <= distance_cap:
            try:
                d = min_distance(C, distance_cap)
                ds = [min_distance(constituent_expand(cc), distance_cap) for cc in ccs]
            except TooLargeToEnumerate as exc:
                res.errors["distance"] = str(exc)
            else:
                rule = d == min(ds, default=INFINITE)
                checks["distance_rule"] = rule
                if lcd_hull:
                    checks["thresholds"] = security_report(code, distance_cap).holds
    return res


def _check_index(args) -> InstanceResult:
    cfg, index, distance_cap, max_minors = args
    code = corpus_instance(cfg, index)
    try:
        return check_instance(code, index, distance_cap, max_minors)
    except MTCodeError as exc:
        res = InstanceResult(index, False)
        res.checks["no_exception"] = False
        res.errors["exception"] = f"{type(exc).__name__}: {exc}"
        return res


def run_corpus(
    cfg: CorpusConfig,
    workers: int = 1,
    distance_cap: int = 2**16,
    max_minors: int = DEFAULT_MAX_MINORS,
) -> list[InstanceResult]:
    jobs = [(cfg, i, distance_cap, max_minors) for i in range(cfg.size)]
    if workers <= 1 or cfg.size < 2:
        return [_check_index(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_check_index, jobs, chunksize=max(1, cfg.size // (4 * workers))))


@dataclass
class VerifySummary:
    cfg: CorpusConfig
    results: list[InstanceResult]

    @property
    def decomposable(self) -> int:
        return sum(r.decomposable for r in self.results)

    def counts(self) -> dict[str, tuple[int, int]]:
        """property -> (passed, checked)"""
        names = list(PROPERTIES)
        for r in self.results:
            for name in r.checks:
                if name not in names:
                    names.append(name)
        out = {}
        for name in names:
            vals = [r.checks.get(name) for r in self.results]
            checked = [v for v in vals if v is not None]
            out[name] = (sum(checked), len(checked))
        return out

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if r.failed]

    @property
    def ok(self) -> bool:
        return not self.failures
