"""Search a fixed MT shape for codes in every (dimension, LCD) bucket.

Each code is classified by how its dimension compares with min(m_i), whether
it is LCD, and the same two facts for its dual.  The search is exhaustive
when the number of generator tuples fits the budget and seeded uniform
sampling otherwise.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .algebra import Poly
from .analysis import analyze
from .decomp import is_decomposable
from .mtcode import MTCode, MTShape, dual, expand, is_lcd_bruteforce

WITNESSES_PER_BUCKET = 3
RELATIONS = ("<", "=", ">")


def _relation(a: int, b: int) -> str:
    return "<" if a < b else "=" if a == b else ">"


def bucket_key(rel: str, lcd: bool, dual_rel: str, dual_lcd: bool) -> str:
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    return f"dim{rel}min_m,lcd={yn(lcd)},dual_dim{dual_rel}min_m,dual_lcd={yn(dual_lcd)}"


def all_bucket_keys() -> list[str]:
    return [
        bucket_key(r, l, dr, dl)
        for r in RELATIONS
        for l in (True, False)
        for dr in RELATIONS
        for dl in (True, False)
    ]


def classify(code: MTCode) -> tuple[str, bool]:
    """Bucket of a code and whether its cofactors are pairwise coprime."""
    C = expand(code)
    D = dual(C)
    mmin = min(code.shape.block_lengths)
    key = bucket_key(
        _relation(C.k, mmin), is_lcd_bruteforce(C), _relation(D.k, mmin), is_lcd_bruteforce(D)
    )
    return key, is_decomposable(code)[0]


@dataclass
class Bucket:
    count: int = 0
    decomposable: int = 0
    witnesses: list[MTCode] = field(default_factory=list)


@dataclass
class ProbeResult:
    shape: MTShape
    rho: int
    exhaustive: bool
    examined: int
    total: int
    buckets: dict[str, Bucket] = field(default_factory=dict)

    @property
    def decomposable_non_lcd(self) -> int:
        return sum(b.decomposable for k, b in self.buckets.items() if ",lcd=no," in k)


def _tuple_from_index(shape: MTShape, idx: int) -> tuple[Poly, ...]:
    q = shape.spec.q
    comps = []
    for m in shape.block_lengths:
        cs = []
        for _ in range(m):
            idx, r = divmod(idx, q)
            cs.append(r)
        comps.append(Poly(shape.spec, cs))
    return tuple(comps)


def probe(shape: MTShape, rho: int, budget: int, seed: int = 0) -> ProbeResult:
    per_gen = shape.spec.q ** shape.n
    total = per_gen**rho
    exhaustive = total <= budget
    if budget <= 0:
        return ProbeResult(shape, rho, False, 0, total)
    if exhaustive:
        choices = itertools.product(range(per_gen), repeat=rho)
    else:
        rng = random.Random(f"mtcodes-probe:{seed}")
        choices = (tuple(rng.randrange(per_gen) for _ in range(rho)) for _ in range(budget))
    result = ProbeResult(shape, rho, exhaustive, 0, total)
    for tup in choices:
        code = MTCode(shape, tuple(_tuple_from_index(shape, i) for i in tup))
        key, dec = classify(code)
        b = result.buckets.setdefault(key, Bucket())
        b.count += 1
        b.decomposable += dec
        if len(b.witnesses) < WITNESSES_PER_BUCKET:
            b.witnesses.append(code)
        result.examined += 1
    return result


def revalidate(result: ProbeResult) -> list[str]:
    """Re-run the full analysis on every witness; returns descriptions of failures."""
    problems = []
    mmin = min(result.shape.block_lengths)
    n = result.shape.n
    for key, b in result.buckets.items():
        for w in b.witnesses:
            a = analyze(w)
            dual_lcd = is_lcd_bruteforce(dual(expand(w)))
            expected = bucket_key(
                _relation(a.k, mmin), a.lcd.by_hull, _relation(n - a.k, mmin), dual_lcd
            )
            if expected != key or not a.ok:
                problems.append(f"{key}: witness reclassified as {expected}, mismatches={a.mismatches}")
    return problems
