import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtcodes.algebra import FieldSpec, Poly
from mtcodes.corpus import CorpusConfig, random_code
from mtcodes.errors import InvalidCode, NotADivisor, ShapeError, TooLargeToEnumerate, ZeroLambda
from mtcodes.linalg import MatrixFq, row_space_equal
from mtcodes.mtcode import (
    INFINITE,
    ConstituentCode,
    LinearCode,
    MTCode,
    MTShape,
    block_projection,
    constituent_expand,
    dual,
    expand,
    hull,
    hull_dimension,
    is_lcd_bruteforce,
    is_twist_closed,
    min_distance,
    project,
    twist_shift,
)

from conftest import P, all_codewords, dot


def code(spec, lams, ms, gens=()):
    return MTCode.from_coeffs(spec, lams, ms, gens)


def brute_min_distance(C):
    words = all_codewords(C.spec, C.basis.entries, C.n)
    weights = [sum(1 for x in w if x) for w in words if any(w)]
    return min(weights, default=INFINITE)


def test_twist_shift_cyclic(F2):
    assert twist_shift([1, 0, 0], MTShape(F2, (1,), (3,))) == [0, 1, 0]


def test_twist_shift_wraps_with_lambda(F3):
    assert twist_shift([0, 1], MTShape(F3, (2,), (2,))) == [2, 0]


def test_twist_shift_zero(F5):
    shape = MTShape(F5, (2, 3), (3, 2))
    assert twist_shift([0] * 5, shape) == [0] * 5


def test_twist_shift_length(F2):
    with pytest.raises(ShapeError):
        twist_shift([1, 0], MTShape(F2, (1,), (3,)))


def test_twist_shift_is_multiplication_by_x(F5):
    shape = MTShape(F5, (2, 3), (3, 4))
    rng = random.Random(0)
    for _ in range(20):
        comps = [Poly(F5, [rng.randrange(5) for _ in range(m)]) for m in shape.block_lengths]
        c = MTCode(shape, (tuple(comps),))
        shifted = MTCode(shape, (tuple(f.shift(1) for f in comps),))
        assert twist_shift(c.vector(0), shape) == shifted.vector(0)


def test_shape_validation(F3):
    with pytest.raises(ZeroLambda):
        MTShape(F3, (0,), (2,))
    with pytest.raises(InvalidCode):
        MTShape(F3, (1, 2), (2,))
    with pytest.raises(InvalidCode):
        MTShape(F3, (1,), (0,))
    with pytest.raises(InvalidCode):
        MTShape(F3, (), ())


def test_generators_reduced_on_construction(F2):
    c = code(F2, [1], [3], [[[1, 0, 0, 1]]])  # x^3 + 1 = 0 mod x^3 - 1
    assert c.generators[0][0].is_zero()
    c = code(F2, [1], [3], [[[0, 0, 0, 1]]])
    assert c.generators[0][0] == P(F2, 1)


def test_expand_zero_code(F2):
    assert expand(code(F2, [1], [3])).k == 0


def test_expand_even_weight(F2):
    C = expand(code(F2, [1], [3], [[[1, 1]]]))
    assert C.k == 2
    assert all_codewords(F2, C.basis.entries, 3) == {
        v for v in itertools.product(range(2), repeat=3) if sum(v) % 2 == 0
    }


def test_expand_two_block_example(F2):
    c = code(F2, [1, 1], [3, 2], [[[1, 1, 1], [1, 1]]])
    C = expand(c)
    # oracle: rank of the 5 x 5 matrix of twist shifts
    rows, v = [], c.vector(0)
    for _ in range(5):
        rows.append(v)
        v = twist_shift(v, c.shape)
    assert C.k == len(all_codewords(F2, rows, 5)).bit_length() - 1
    assert C.k == 1


def test_dual_pairs(F2):
    assert dual(LinearCode.zero(F2, 4)).k == 4
    assert dual(LinearCode.full(F2, 4)).k == 0
    even = expand(code(F2, [1], [3], [[[1, 1]]]))
    assert dual(even).basis.entries == ((1, 1, 1),)


def test_hull_examples(F2):
    rep = LinearCode.from_rows(F2, 3, [[1, 1, 1]])
    assert hull(rep).k == 0
    c11 = LinearCode.from_rows(F2, 2, [[1, 1]])
    assert hull(c11) == c11


def _hull_oracle(C):
    """Codewords of C orthogonal to every codeword of C."""
    words = all_codewords(C.spec, C.basis.entries, C.n)
    return {w for w in words if all(dot(C.spec, w, b) == 0 for b in C.basis.entries)}


@pytest.mark.parametrize("q", [2, 3, 4])
def test_hull_against_enumeration(q):
    spec = FieldSpec.of_order(q)
    rng = random.Random(q)
    for _ in range(25):
        n = rng.randint(1, 5)
        C = LinearCode.from_rows(spec, n, [[rng.randrange(q) for _ in range(n)] for _ in range(rng.randint(0, 3))])
        H = hull(C)
        assert all_codewords(spec, H.basis.entries, n) == _hull_oracle(C)
        assert H == hull(dual(C))
        assert hull_dimension(C) == H.k


def test_is_lcd_bruteforce_examples(F2):
    assert is_lcd_bruteforce(LinearCode.zero(F2, 3))
    assert not is_lcd_bruteforce(LinearCode.from_rows(F2, 2, [[1, 1]]))
    assert is_lcd_bruteforce(LinearCode.from_rows(F2, 7, [[1] * 7]))


def test_min_distance_examples(F2):
    assert min_distance(LinearCode.zero(F2, 3)) == INFINITE
    assert min_distance(expand(code(F2, [1], [3], [[[1, 1]]]))) == 2
    assert min_distance(LinearCode.from_rows(F2, 7, [[1] * 7])) == 7


def test_min_distance_cap(F3):
    C = LinearCode.full(F3, 12)
    with pytest.raises(TooLargeToEnumerate) as info:
        min_distance(C, max_enum=1000)
    assert info.value.count == 3**12


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8])
def test_min_distance_matches_enumeration(q):
    spec = FieldSpec.of_order(q)
    rng = random.Random(100 + q)
    for _ in range(15):
        n = rng.randint(1, 9)
        kmax = {2: 7, 3: 5, 4: 4, 5: 3, 8: 3}[q]
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(rng.randint(1, kmax))]
        C = LinearCode.from_rows(spec, n, rows)
        assert min_distance(C) == brute_min_distance(C)


def test_min_distance_gray_walk(F2):
    # k large enough that the high rows are walked in Gray-code order
    rng = random.Random(5)
    rows = [[rng.randrange(2) for _ in range(20)] for _ in range(15)]
    rows.append([1] * 20)
    C = LinearCode.from_rows(F2, 20, rows)
    assert C.k > 12
    assert min_distance(C) == brute_min_distance(C)


def test_project_zero_code(F3):
    c = code(F3, [2], [4])
    assert project(c, 0).gen_poly == Poly.x_pow_minus(F3, 4, 2)


def test_project_two_block(F2):
    c = code(F2, [1, 1], [3, 2], [[[1, 1, 1], [1, 1]]])
    assert project(c, 0).gen_poly == P(F2, 1, 1, 1)
    assert project(c, 1).gen_poly == P(F2, 1, 1)


def test_project_index(F2):
    with pytest.raises(IndexError):
        project(code(F2, [1], [3]), 1)


def test_constituent_requires_divisor(F2):
    with pytest.raises(NotADivisor):
        ConstituentCode(F2, 0, 1, 3, P(F2, 1, 0, 1))


def test_constituent_expand_edges(F5):
    mod = Poly.x_pow_minus(F5, 3, 2)
    assert constituent_expand(ConstituentCode(F5, 0, 2, 3, mod)).k == 0
    assert constituent_expand(ConstituentCode(F5, 0, 2, 3, Poly.one(F5))).k == 3


def test_hamming_code(F2):
    C = constituent_expand(ConstituentCode(F2, 0, 1, 7, P(F2, 1, 1, 0, 1)))
    assert C.k == 4
    assert brute_min_distance(C) == 3
    assert min_distance(C) == 3


CFG = CorpusConfig()


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_code_invariants(seed):
    c = random_code(random.Random(seed), CFG)
    shape = c.shape
    C = expand(c)
    D = dual(C)
    assert is_twist_closed(C, shape)
    assert C.k + D.k == shape.n
    assert dual(D) == C
    H = hull(C)
    assert C.contains(H) and D.contains(H) and H == hull(D)
    for i in range(shape.ell):
        cc = project(c, i)
        assert constituent_expand(cc).k == cc.m - cc.gen_poly.degree
        assert block_projection(C, shape, i) == constituent_expand(cc)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_projection_is_principal_ideal(seed):
    rng = random.Random(seed)
    c = random_code(rng, CFG)
    for i in range(c.shape.ell):
        m = c.shape.block_lengths[i]
        mod = c.shape.modulus(i)
        rows = []
        for g in c.generators:
            for j in range(m):
                f = g[i].shift(j) % mod
                rows.append([f[t] for t in range(m)])
        cc = project(c, i)
        if rows:
            ideal = MatrixFq(c.spec, rows, m)
            gen = constituent_expand(cc).basis
            if gen.rows:
                assert row_space_equal(ideal, gen)
            else:
                assert ideal.is_zero()
        else:
            assert cc.is_zero()
