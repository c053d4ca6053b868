"""Command-line entry point.

Exit codes: 0 when every check passes, 1 for usage or input errors, 2 when a
closed-form criterion disagreed with its brute-force oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .algebra import FieldSpec
from .analysis import (
    analysis_lines,
    basis_lines,
    decomposition_lines,
    dimension_lines,
    fmt_bool,
    fmt_dist,
    lcd_lines,
    render,
    shape_lines,
)
from .codefile import load_code_file, serialize_code
from .corpus import CorpusConfig, VerifySummary, check_instance, corpus_instance, run_corpus
from .decomp import decompose
from .dimension import dimension_report
from .errors import MTCodeError, TooLargeToEnumerate
from .lcd import NOT_APPLICABLE, corollary8_applies, mt_is_lcd_theorem9
from .linalg import DEFAULT_MAX_MINORS
from .mtcode import DEFAULT_MAX_ENUM, MTShape, dual, expand, min_distance
from .probe import all_bucket_keys, probe, revalidate

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace("[", "").replace("]", "").split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for criterion mismatches."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=d(0), help="random seed (default 0)")
    parser.add_argument(
        "--max-enum", type=int, default=d(DEFAULT_MAX_ENUM), help="codeword enumeration cap"
    )
    parser.add_argument(
        "--max-minors", type=int, default=d(DEFAULT_MAX_MINORS), help="cap on l x l minors"
    )
    parser.add_argument(
        "--machine", action="store_true", default=d(False), help="stable machine-readable output"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mtcodes",
        description="Analyze and cross-check multi-twisted codes over finite fields.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in [
        ("analyze", "full report: decomposition, dimensions, LCD verdicts, distances"),
        ("dim", "dimension by rank, gcd of minors and triangular basis"),
        ("dual", "basis of the Euclidean dual"),
        ("mindist", "minimum distance by exhaustive enumeration"),
        ("decompose", "constituents, cofactors and direct-sum checks"),
        ("lcd", "LCD criteria against the hull"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_text, allow_abbrev=False)
        p.add_argument("file", help="code description file")

    v = sub.add_parser(
        "verify", parents=[common], help="run every invariant on a seeded corpus", allow_abbrev=False
    )
    v.add_argument("--size", type=int, default=500, help="corpus size (default 500)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--q-values", type=_int_list, default=[2, 3, 4, 5])
    v.add_argument("--max-ell", type=int, default=3)
    v.add_argument("--max-m", type=int, default=6)
    v.add_argument("--max-rho", type=int, default=3)
    v.add_argument(
        "--distance-cap", type=int, default=2**16, help="largest q^k checked for distances"
    )
    v.add_argument("--replay-dir", default="mtcodes-replay", help="where failing instances go")
    v.add_argument("--replay", metavar="FILE", help="re-check a single stored instance")

    pr = sub.add_parser(
        "probe",
        parents=[common],
        help="bucket codes of one shape by dimension and LCD",
        allow_abbrev=False,
    )
    pr.add_argument("--q", type=int, required=True)
    pr.add_argument("--modulus", type=_int_list)
    pr.add_argument("--lambda", dest="lambdas", type=_int_list, required=True)
    pr.add_argument("--m", type=_int_list, required=True)
    pr.add_argument("--rho", type=int, default=1)
    pr.add_argument("--budget", type=int, default=10**4)
    return parser


def _emit(lines, args) -> None:
    sys.stdout.write(render(lines, args.machine))


def cmd_analyze(args) -> int:
    from .analysis import analyze

    code = load_code_file(args.file)
    t0 = time.perf_counter()
    a = analyze(code, args.max_enum, args.max_minors)
    lines = analysis_lines(a, args.machine)
    if not args.machine:
        lines.append(("elapsed_s", f"{time.perf_counter() - t0:.3f}"))
    _emit(lines, args)
    return EXIT_OK if a.ok else EXIT_MISMATCH


def cmd_dim(args) -> int:
    code = load_code_file(args.file)
    rep = dimension_report(code, args.max_minors)
    _emit(shape_lines(code) + dimension_lines(rep, args.machine), args)
    return EXIT_OK if rep.agree else EXIT_MISMATCH


def cmd_dual(args) -> int:
    code = load_code_file(args.file)
    C = expand(code)
    D = dual(C)
    lines = shape_lines(code) + [("k", str(C.k)), ("dual.k", str(D.k))]
    lines += basis_lines("dual.basis", D.basis)
    _emit(lines, args)
    return EXIT_OK


def cmd_mindist(args) -> int:
    code = load_code_file(args.file)
    C = expand(code)
    lines = shape_lines(code) + [("k", str(C.k))]
    try:
        d = min_distance(C, args.max_enum)
    except TooLargeToEnumerate as exc:
        lines.append(("d", "too_large"))
        lines.append(("codewords", str(exc.count)))
        _emit(lines, args)
        return EXIT_USAGE
    lines.append(("d", fmt_dist(d)))
    _emit(lines, args)
    return EXIT_OK


def cmd_decompose(args) -> int:
    code = load_code_file(args.file)
    rep = decompose(code, args.max_enum)
    _emit(shape_lines(code) + decomposition_lines(rep, args.machine), args)
    return EXIT_MISMATCH if rep.failures() else EXIT_OK


def cmd_lcd(args) -> int:
    code = load_code_file(args.file)
    v = mt_is_lcd_theorem9(code)
    cor8 = True if corollary8_applies(code) else NOT_APPLICABLE
    lines = shape_lines(code) + lcd_lines(v, args.machine)
    lines.append(("lcd.corollary8", fmt_bool(cor8)))
    ok = v.consistent and (cor8 is NOT_APPLICABLE or v.by_hull)
    lines.append(("status", "pass" if ok else "mismatch"))
    _emit(lines, args)
    return EXIT_OK if ok else EXIT_MISMATCH


def _verify_replay(args) -> int:
    code = load_code_file(args.replay)
    res = check_instance(code, distance_cap=args.distance_cap, max_minors=args.max_minors)
    lines = shape_lines(code) + [("decomposable", fmt_bool(res.decomposable))]
    lines += [(f"property.{k}", fmt_bool(v)) for k, v in res.checks.items()]
    lines.append(("status", "fail" if res.failed else "pass"))
    _emit(lines, args)
    return EXIT_MISMATCH if res.failed else EXIT_OK


def cmd_verify(args) -> int:
    if args.replay:
        return _verify_replay(args)
    cfg = CorpusConfig(
        size=args.size,
        seed=args.seed,
        q_values=tuple(args.q_values),
        ell_range=(1, args.max_ell),
        m_range=(1, args.max_m),
        rho_range=(0, args.max_rho),
    )
    t0 = time.perf_counter()
    summary = VerifySummary(cfg, run_corpus(cfg, args.workers, args.distance_cap, args.max_minors))
    lines = [
        ("seed", str(cfg.seed)),
        ("corpus_size", str(cfg.size)),
        ("q_values", str(list(cfg.q_values))),
        ("ell_range", str(list(cfg.ell_range))),
        ("m_range", str(list(cfg.m_range))),
        ("rho_range", str(list(cfg.rho_range))),
        ("distance_cap", str(args.distance_cap)),
        ("decomposable", str(summary.decomposable)),
    ]
    for name, (passed, checked) in summary.counts().items():
        lines.append((f"property.{name}", f"{passed}/{checked}"))
    failures = summary.failures
    lines.append(("failures", str(len(failures))))
    if failures:
        out = Path(args.replay_dir)
        out.mkdir(parents=True, exist_ok=True)
        for r in failures:
            path = out / f"seed{cfg.seed}-instance{r.index}.mt"
            code = corpus_instance(cfg, r.index)
            notes = [f"seed = {cfg.seed}", f"index = {r.index}", f"failed = {','.join(r.failed)}"]
            notes += [f"{k}: {v}" for k, v in r.errors.items()]
            path.write_text(serialize_code(code, notes), encoding="utf-8")
            lines.append((f"replay.{r.index}", str(path)))
    lines.append(("status", "pass" if summary.ok else "fail"))
    if not args.machine:
        lines.append(("elapsed_s", f"{time.perf_counter() - t0:.2f}"))
    _emit(lines, args)
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def cmd_probe(args) -> int:
    try:
        spec = FieldSpec.of_order(args.q, args.modulus)
    except ValueError as exc:
        raise MTCodeError(str(exc)) from None
    shape = MTShape(spec, tuple(args.lambdas), tuple(args.m))
    res = probe(shape, args.rho, args.budget, args.seed)
    problems = revalidate(res)
    lines = [
        ("q", str(spec.q)),
        ("lambda", str(list(shape.lambdas))),
        ("m", str(list(shape.block_lengths))),
        ("rho", str(res.rho)),
        ("exhaustive", fmt_bool(res.exhaustive)),
        ("total", str(res.total)),
        ("examined", str(res.examined)),
    ]
    if not res.exhaustive:
        lines.insert(0, ("seed", str(args.seed)))
    for key in all_bucket_keys():
        b = res.buckets.get(key)
        if b is None:
            if args.machine:
                lines.append((f"bucket.{key}.count", "0"))
            continue
        lines.append((f"bucket.{key}.count", str(b.count)))
        lines.append((f"bucket.{key}.decomposable", str(b.decomposable)))
        for j, w in enumerate(b.witnesses, start=1):
            gens = json.dumps([[list(f.coeffs) for f in g] for g in w.generators])
            lines.append((f"bucket.{key}.witness.{j}", gens))
    lines.append(("decomposable_non_lcd", str(res.decomposable_non_lcd)))
    lines.append(("revalidation", "pass" if not problems else "fail"))
    for j, p in enumerate(problems, start=1):
        lines.append((f"revalidation.problem.{j}", p))
    _emit(lines, args)
    return EXIT_MISMATCH if problems else EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "dim": cmd_dim,
    "dual": cmd_dual,
    "mindist": cmd_mindist,
    "decompose": cmd_decompose,
    "lcd": cmd_lcd,
    "verify": cmd_verify,
    "probe": cmd_probe,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (MTCodeError, OSError) as exc:
        print(f"mtcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
