"""One-shot analysis of an MT code, and its key = value rendering."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import Poly
from .decomp import DecompositionReport, decompose
from .dimension import DimensionReport, dimension_report
from .lcd import NOT_APPLICABLE, LcdVerdict, corollary8_applies, mt_is_lcd_theorem9
from .linalg import DEFAULT_MAX_MINORS, MatrixFq
from .mtcode import DEFAULT_MAX_ENUM, INFINITE, MTCode, expand


@dataclass
class Analysis:
    code: MTCode
    k: int
    decomposition: DecompositionReport
    dimension: DimensionReport
    lcd: LcdVerdict
    corollary8: object = NOT_APPLICABLE
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def analyze(
    code: MTCode, max_enum: int = DEFAULT_MAX_ENUM, max_minors: int = DEFAULT_MAX_MINORS
) -> Analysis:
    C = expand(code)
    dec = decompose(code, max_enum)
    dim = dimension_report(code, max_minors)
    verdict = mt_is_lcd_theorem9(code)
    cor8 = NOT_APPLICABLE
    mismatches = []
    if not dim.agree:
        mismatches.append("dimension")
    mismatches.extend(dec.failures())
    if not verdict.consistent:
        mismatches.append("theorem9")
    if corollary8_applies(code):
        cor8 = True
        if not verdict.by_hull:
            mismatches.append("corollary8")
    return Analysis(code, C.k, dec, dim, verdict, cor8, mismatches)


# -- rendering --

def fmt_poly(f: Poly, machine: bool) -> str:
    return str(list(f.coeffs)) if machine else f.format()


def fmt_dist(d) -> str:
    if d is None:
        return "skipped"
    return "inf" if d == INFINITE else str(d)


def fmt_bool(b) -> str:
    if b is None:
        return "skipped"
    if b is NOT_APPLICABLE:
        return "not_applicable"
    return "true" if b else "false"


def shape_lines(code: MTCode) -> list[tuple[str, str]]:
    spec = code.spec
    out = [("q", str(spec.q))]
    if spec.e > 1:
        out.append(("modulus", str(list(spec.modulus))))
    out += [
        ("ell", str(code.shape.ell)),
        ("lambda", str(list(code.shape.lambdas))),
        ("m", str(list(code.shape.block_lengths))),
        ("n", str(code.shape.n)),
        ("rho", str(code.rho)),
    ]
    return out


def dimension_lines(rep: DimensionReport, machine: bool) -> list[tuple[str, str]]:
    def opt(v):
        return "error" if v is None else str(v)

    if rep.k_minors is None:
        status = "not computed"
    else:
        status = "validated" if rep.k_minors == rep.k_rank else "contradicted"
    out = [
        ("dim.rank", opt(rep.k_rank)),
        ("dim.minors", opt(rep.k_minors)),
        ("dim.minors_label", f"candidate formula ({status})"),
        ("dim.hnf", opt(rep.k_hnf)),
        ("dim.minor_count", str(rep.minor_count)),
        (
            "dim.minors_gcd",
            "error" if rep.minors_gcd_poly is None else fmt_poly(rep.minors_gcd_poly, machine),
        ),
    ]
    if rep.hnf_diagonal is None:
        out.append(("dim.hnf_diagonal", "error"))
    else:
        out.append(("dim.hnf_diagonal", "; ".join(fmt_poly(d, machine) for d in rep.hnf_diagonal)))
    out.append(("dim.agree", fmt_bool(rep.agree)))
    for k, v in sorted(rep.errors.items()):
        out.append((f"dim.error.{k}", v))
    return out


def decomposition_lines(dec: DecompositionReport, machine: bool) -> list[tuple[str, str]]:
    out = []
    for c in dec.constituents:
        b = f"block.{c.index + 1}"
        out += [
            (f"{b}.g", fmt_poly(c.gen_poly, machine)),
            (f"{b}.h", fmt_poly(c.cofactor, machine)),
            (f"{b}.dim", str(c.dimension)),
            (f"{b}.d", fmt_dist(c.distance)),
        ]
    out.append(("decomposable", fmt_bool(dec.decomposable)))
    for (i, j), g in sorted(dec.witnesses.items()):
        out.append((f"witness.{i + 1}.{j + 1}", fmt_poly(g, machine)))
    out += [
        ("direct_sum", fmt_bool(dec.direct_sum_holds)),
        ("dual_direct_sum", fmt_bool(dec.dual_direct_sum_holds)),
        ("d", fmt_dist(dec.code_distance)),
        ("distance_rule", fmt_bool(dec.distance_rule_holds)),
    ]
    if dec.thresholds is None:
        out.append(("threshold.S", "not_applicable"))
    else:
        out.append(("threshold.S", fmt_dist(dec.thresholds.S)))
        blocks = ", ".join(fmt_dist(s) for s in dec.thresholds.S_blocks)
        out.append(("threshold.S_blocks", f"[{blocks}]"))
        out.append(("threshold.min_rule", fmt_bool(dec.thresholds.holds)))
    return out


def lcd_lines(v: LcdVerdict, machine: bool) -> list[tuple[str, str]]:
    out = [("lcd.theorem9", fmt_bool(v.by_criterion)), ("lcd.hull", fmt_bool(v.by_hull))]
    for r in v.per_block:
        b = f"lcd.block.{r.index + 1}"
        out += [
            (f"{b}.unit_square_is_one", fmt_bool(r.unit_square_is_one)),
            (f"{b}.self_reciprocal", fmt_bool(r.self_reciprocal)),
            (f"{b}.gcd_g_h", fmt_poly(r.gcd_with_cofactor, machine)),
        ]
    return out


def analysis_lines(a: Analysis, machine: bool) -> list[tuple[str, str]]:
    out = shape_lines(a.code)
    out.append(("k", str(a.k)))
    out += decomposition_lines(a.decomposition, machine)
    out += dimension_lines(a.dimension, machine)
    out += lcd_lines(a.lcd, machine)
    out.append(("lcd.corollary8", fmt_bool(a.corollary8)))
    out.append(("mismatches", ",".join(a.mismatches) if a.mismatches else "none"))
    out.append(("status", "pass" if a.ok else "mismatch"))
    return out


def basis_lines(prefix: str, B: MatrixFq) -> list[tuple[str, str]]:
    return [(f"{prefix}.{r + 1}", str(list(row))) for r, row in enumerate(B.entries)]


def render(lines: list[tuple[str, str]], machine: bool) -> str:
    if machine:
        return "".join(f"{k} = {v}\n" for k, v in lines)
    width = max((len(k) for k, _ in lines), default=0)
    return "".join(f"{k:<{width}} = {v}\n" for k, v in lines)
