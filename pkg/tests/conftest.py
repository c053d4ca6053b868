import itertools

import pytest

from mtcodes.algebra import FieldSpec, Poly


@pytest.fixture(scope="session")
def F2():
    return FieldSpec(2)


@pytest.fixture(scope="session")
def F3():
    return FieldSpec(3)


@pytest.fixture(scope="session")
def F4():
    return FieldSpec(2, 2, (1, 1, 1))


@pytest.fixture(scope="session")
def F5():
    return FieldSpec(5)


def P(spec, *coeffs):
    """Polynomial from ascending coefficients."""
    return Poly(spec, coeffs)


def all_codewords(spec, basis_rows, n):
    """Every F_q-combination of the rows, by plain enumeration."""
    out = set()
    for msg in itertools.product(range(spec.q), repeat=len(basis_rows)):
        v = [0] * n
        for c, row in zip(msg, basis_rows):
            for j, x in enumerate(row):
                v[j] = spec.add(v[j], spec.mul(c, x))
        out.add(tuple(v))
    return out


def dot(spec, u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = spec.add(acc, spec.mul(a, b))
    return acc
