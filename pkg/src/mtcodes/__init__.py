"""Computer algebra for multi-twisted codes over finite fields.

Builds MT codes from generator tuples, splits them into constacyclic
constituents, evaluates LCD criteria and dimension formulas, and checks each
closed-form answer against a brute-force computation on the explicit code.
"""

__version__ = "0.1.0"

from .algebra import FieldElement, FieldSpec, Poly, poly_gcd, reciprocal, is_self_reciprocal
from .mtcode import (
    INFINITE,
    ConstituentCode,
    LinearCode,
    MTCode,
    MTShape,
    dual,
    expand,
    hull,
    is_lcd_bruteforce,
    min_distance,
    project,
)
from .codefile import parse_code_file, serialize_code

__all__ = [
    "FieldElement",
    "FieldSpec",
    "Poly",
    "poly_gcd",
    "reciprocal",
    "is_self_reciprocal",
    "INFINITE",
    "ConstituentCode",
    "LinearCode",
    "MTCode",
    "MTShape",
    "dual",
    "expand",
    "hull",
    "is_lcd_bruteforce",
    "min_distance",
    "project",
    "parse_code_file",
    "serialize_code",
]
