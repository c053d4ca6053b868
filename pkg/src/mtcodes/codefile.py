"""Reading and writing the text description of an MT code.

Example::

    q = 4
    modulus = [1, 1, 1]          # F_p coefficients, only for proper prime powers
    lambda = [1, 2]
    m = [3, 5]
    gen = [[1, 1], [0, 2, 1]]    # one line per generator tuple
    gen = [[1], [1, 0, 0, 1]]

``#`` starts a comment.  Values are JSON arrays of integers; coefficient
vectors list ascending degrees and hold field-element codes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import FieldSpec, Poly, prime_power
from .errors import (
    CodeFileError,
    CoefficientOutOfRange,
    LengthMismatch,
    ZeroLambda,
)
from .mtcode import MTCode, MTShape

KEYS = ("q", "modulus", "lambda", "m", "gen")


def _parse_value(raw: str, lineno: int, col: int):
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"malformed value: {exc.msg}", lineno, col + exc.colno - 1) from None


def _int_list(value, key, lineno, col):
    if not isinstance(value, list) or not all(type(v) is int for v in value):
        raise CodeFileError(f"{key} must be a list of integers", lineno, col)
    return value


def parse_code_file(text: str) -> MTCode:
    fields: dict[str, tuple] = {}
    gens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        if "=" not in body:
            raise CodeFileError("expected 'key = value'", lineno, len(body) - len(body.lstrip()) + 1)
        key_part, raw = body.split("=", 1)
        key = key_part.strip()
        col = len(key_part) + 2 + (len(raw) - len(raw.lstrip()))
        if key not in KEYS:
            raise CodeFileError(f"unknown key {key!r}", lineno, len(key_part) - len(key_part.lstrip()) + 1)
        value = _parse_value(raw.strip(), lineno, col)
        if key == "gen":
            gens.append((value, lineno, col))
        elif key in fields:
            raise CodeFileError(f"duplicate key {key!r}", lineno, 1)
        else:
            fields[key] = (value, lineno, col)

    for key in ("q", "lambda", "m"):
        if key not in fields:
            raise CodeFileError(f"missing required key {key!r}")

    q, qline, qcol = fields["q"]
    if type(q) is not int:
        raise CodeFileError("q must be an integer", qline, qcol)
    try:
        p, e = prime_power(q)
    except ValueError:
        raise CodeFileError(f"q = {q} is not a prime power", qline, qcol) from None
    if e > 1:
        if "modulus" not in fields:
            raise CodeFileError(f"q = {q} is a proper prime power; 'modulus' is required", qline)
        mod, mline, mcol = fields["modulus"]
        mod = _int_list(mod, "modulus", mline, mcol)
        try:
            spec = FieldSpec(p, e, tuple(mod))
        except ValueError as exc:
            raise CodeFileError(str(exc), mline, mcol) from None
    else:
        if "modulus" in fields:
            raise CodeFileError(f"q = {q} is prime; 'modulus' is not allowed", fields["modulus"][1])
        try:
            spec = FieldSpec(p)
        except ValueError as exc:
            raise CodeFileError(str(exc), qline, qcol) from None

    lams, lline, lcol = fields["lambda"]
    lams = _int_list(lams, "lambda", lline, lcol)
    ms, mline, mcol = fields["m"]
    ms = _int_list(ms, "m", mline, mcol)
    if not lams:
        raise LengthMismatch("lambda must have at least one entry", lline, lcol)
    if len(lams) != len(ms):
        raise LengthMismatch(f"lambda has {len(lams)} entries but m has {len(ms)}", mline, mcol)
    for lam in lams:
        if not 0 <= lam < q:
            raise CoefficientOutOfRange(f"lambda entry {lam} outside [0, {q})", lline, lcol)
        if lam == 0:
            raise ZeroLambda("lambda entries must be nonzero", lline, lcol)
    for m in ms:
        if m < 1:
            raise CodeFileError(f"block length {m} must be >= 1", mline, mcol)

    ell = len(lams)
    tuples = []
    for value, gline, gcol in gens:
        if not isinstance(value, list) or not all(isinstance(c, list) for c in value):
            raise CodeFileError("gen must be a list of coefficient lists", gline, gcol)
        if len(value) != ell:
            raise LengthMismatch(f"gen has {len(value)} components, expected {ell}", gline, gcol)
        comps = []
        for c in value:
            c = _int_list(c, "gen component", gline, gcol)
            for v in c:
                if not 0 <= v < q:
                    raise CoefficientOutOfRange(f"coefficient {v} outside [0, {q})", gline, gcol)
            comps.append(Poly(spec, c))
        tuples.append(tuple(comps))
    return MTCode(MTShape(spec, tuple(lams), tuple(ms)), tuple(tuples))


def load_code_file(path) -> MTCode:
    return parse_code_file(Path(path).read_text(encoding="utf-8"))


def serialize_code(code: MTCode, comments=()) -> str:
    """Canonical text form; parsing it returns an equal code."""
    spec = code.spec
    lines = [f"# {c}" for c in comments]
    lines.append(f"q = {spec.q}")
    if spec.e > 1:
        lines.append(f"modulus = {json.dumps(list(spec.modulus))}")
    lines.append(f"lambda = {json.dumps(list(code.shape.lambdas))}")
    lines.append(f"m = {json.dumps(list(code.shape.block_lengths))}")
    for g in code.generators:
        lines.append(f"gen = {json.dumps([list(f.coeffs) for f in g])}")
    return "\n".join(lines) + "\n"
