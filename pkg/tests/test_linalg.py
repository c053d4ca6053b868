import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtcodes.algebra import FieldSpec, Poly, poly_gcd
from mtcodes.errors import RankDeficient, ShapeError, TooManyMinors
from mtcodes.linalg import (
    MatrixFq,
    PolyMatrix,
    diagonal,
    hnf_triangularize,
    minors_gcd,
    null_space,
    poly_det,
    rank,
    reduces_to_zero,
    row_space_equal,
    rref,
)

from conftest import P, all_codewords, dot


def M(spec, rows, cols=None):
    return MatrixFq(spec, rows, cols)


def test_rref_identity(F2):
    I = MatrixFq.identity(F2, 3)
    assert rref(I) == (I, 3)


def test_rref_zero(F2):
    Z = MatrixFq.zeros(F2, 2, 3)
    assert rref(Z) == (Z, 0)


def test_rref_dependent_rows(F2):
    R, r = rref(M(F2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
    assert r == 2
    assert R.entries == ((1, 0, 1), (0, 1, 1), (0, 0, 0))


def test_rref_idempotent_and_pivots(F5):
    rng = random.Random(1)
    for _ in range(50):
        A = M(F5, [[rng.randrange(5) for _ in range(6)] for _ in range(4)])
        R, r = rref(A)
        assert rref(R) == (R, r)
        pivots = [next(j for j, x in enumerate(row) if x) for row in R.entries[:r]]
        assert pivots == sorted(set(pivots))
        for i, c in enumerate(pivots):
            assert [R[t, c] for t in range(R.rows)] == [int(t == i) for t in range(R.rows)]


def test_null_space_examples(F2):
    assert null_space(M(F2, [[1, 1]])).entries == ((1, 1),)
    assert null_space(MatrixFq.identity(F2, 3)).rows == 0


def test_null_space_of_repetition_code(F2):
    N = null_space(M(F2, [[1, 1, 1]]))
    # oracle: keep the length-3 vectors orthogonal to 111
    expected = {v for v in itertools.product(range(2), repeat=3) if sum(v) % 2 == 0}
    assert N.rows == 2
    assert all_codewords(F2, N.entries, 3) == expected


def test_null_space_dimension_and_orthogonality(F3):
    rng = random.Random(2)
    for _ in range(50):
        A = M(F3, [[rng.randrange(3) for _ in range(5)] for _ in range(rng.randint(1, 4))])
        N = null_space(A)
        assert N.rows == A.cols - rank(A)
        for a in A.entries:
            for v in N.entries:
                assert dot(F3, a, v) == 0


def test_row_space_equal(F3):
    A = M(F3, [[1, 2, 0], [0, 1, 1]])
    assert row_space_equal(A, M(F3, [[0, 1, 1], [1, 2, 0]]))
    assert row_space_equal(A, M(F3, [[2, 1, 0], [0, 1, 1]]))


def test_row_space_distinct(F2):
    assert not row_space_equal(M(F2, [[1, 1, 0]]), M(F2, [[0, 1, 1]]))


def test_row_space_shape_mismatch(F2):
    with pytest.raises(ShapeError):
        row_space_equal(M(F2, [[1, 1]]), M(F2, [[1, 1, 0]]))


def PM(spec, rows):
    return PolyMatrix(spec, [[Poly(spec, c) for c in r] for r in rows])


def test_det_diagonal(F2):
    assert poly_det(PM(F2, [[[1, 1], []], [[], [1, 0, 1]]])) == P(F2, 1, 1, 1, 1)


def test_det_zero_row(F3):
    assert poly_det(PM(F3, [[[1, 1], [2]], [[], []]])).is_zero()


def _lagrange(spec, points):
    """Interpolating polynomial through (a, y) pairs."""
    acc = Poly.zero(spec)
    for i, (ai, yi) in enumerate(points):
        term = Poly.constant(spec, yi)
        for j, (aj, _) in enumerate(points):
            if i != j:
                num = P(spec, spec.neg(aj), 1)
                term = (term * num).scale(spec.inv(spec.sub(ai, aj)))
        acc = acc + term
    return acc


def _det_fq(spec, rows):
    """Determinant over F_q by Gaussian elimination."""
    a = [list(r) for r in rows]
    k = len(a)
    det = 1
    for c in range(k):
        piv = next((i for i in range(c, k) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = spec.neg(det)
        det = spec.mul(det, a[c][c])
        inv = spec.inv(a[c][c])
        for i in range(c + 1, k):
            f = spec.mul(a[i][c], inv)
            a[i] = [spec.sub(x, spec.mul(f, y)) for x, y in zip(a[i], a[c])]
    return det


def test_det_2x2_by_interpolation(F3):
    A = PM(F3, [[[0, 1], [1]], [[1], [0, 1]]])
    d = poly_det(A)
    pts = [(a, _det_fq(F3, [[f(a) for f in r] for r in A.entries])) for a in range(3)]
    assert d == _lagrange(F3, pts)
    assert d == P(F3, 2, 0, 1)


def _random_pm(rng, spec, rows, cols, maxdeg):
    return PolyMatrix(
        spec,
        [
            [Poly(spec, [rng.randrange(spec.q) for _ in range(rng.randint(0, maxdeg + 1))]) for _ in range(cols)]
            for _ in range(rows)
        ],
    )


@pytest.mark.parametrize("q,k", [(2, 5), (3, 5), (5, 6), (4, 5), (2, 3)])
def test_bareiss_matches_cofactor_and_pointwise(q, k):
    spec = FieldSpec.of_order(q)
    rng = random.Random(q * 10 + k)
    for _ in range(10):
        A = _random_pm(rng, spec, k, k, 2)
        d1 = poly_det(A, method="cofactor")
        d2 = poly_det(A, method="bareiss")
        assert d1 == d2
        for a in range(q):
            assert d1(a) == _det_fq(spec, [[f(a) for f in r] for r in A.entries])


def test_det_alternating_and_multilinear(F5):
    rng = random.Random(7)
    for _ in range(20):
        A = _random_pm(rng, F5, 3, 3, 2)
        d = poly_det(A)
        rows = list(A.entries)
        rows[0], rows[2] = rows[2], rows[0]
        assert poly_det(PolyMatrix(F5, rows)) == -d
        c = rng.randrange(1, 5)
        rows = [list(r) for r in A.entries]
        rows[1] = [f.scale(c) for f in rows[1]]
        assert poly_det(PolyMatrix(F5, rows)) == d.scale(c)


def test_det_non_square(F2):
    with pytest.raises(ShapeError):
        poly_det(PM(F2, [[[1], [1]]]))


def test_minors_gcd_column(F2):
    assert minors_gcd(PM(F2, [[[1, 1]], [[1, 0, 0, 1]]]), 1) == P(F2, 1, 1)


def test_minors_gcd_single_nonzero_minor(F3):
    f, g = P(F3, 2, 1), P(F3, 1, 0, 2)
    z = Poly.zero(F3)
    A = PolyMatrix(F3, [[z, z], [f, z], [z, z], [z, g]])
    assert minors_gcd(A, 2) == (f * g).monic()


def test_minors_gcd_all_zero(F2):
    z = Poly.zero(F2)
    assert minors_gcd(PolyMatrix(F2, [[z, z], [z, z]]), 2).is_zero()


def test_minors_gcd_brute_force(F2):
    rng = random.Random(11)
    for _ in range(30):
        A = _random_pm(rng, F2, 3, 2, 2)
        e = A.entries
        dets = [e[i][0] * e[j][1] - e[i][1] * e[j][0] for i, j in [(0, 1), (0, 2), (1, 2)]]
        nz = [d for d in dets if not d.is_zero()]
        expected = poly_gcd(*nz) if nz else Poly.zero(F2)
        assert minors_gcd(A, 2) == expected
        for d in dets:
            assert expected.is_zero() or expected.divides(d)


def test_minors_gcd_range(F2):
    A = PM(F2, [[[1], [1]]])
    with pytest.raises(ShapeError):
        minors_gcd(A, 2)
    with pytest.raises(ShapeError):
        minors_gcd(A, 0)


def test_minors_cap(F2):
    A = _random_pm(random.Random(0), F2, 8, 3, 1)
    with pytest.raises(TooManyMinors) as info:
        minors_gcd(A, 3, max_minors=10)
    assert info.value.count == 56


def _stacked(spec, gens, moduli):
    z = Poly.zero(spec)
    rows = [list(g) for g in gens]
    for i, m in enumerate(moduli):
        rows.append([m if j == i else z for j in range(len(moduli))])
    return PolyMatrix(spec, rows)


def test_hnf_zero_code(F3):
    mods = [Poly.x_pow_minus(F3, 2, 1), Poly.x_pow_minus(F3, 3, 2)]
    A = _stacked(F3, [], mods)
    assert hnf_triangularize(A) == A


def test_hnf_single_column(F2):
    A = PM(F2, [[[1, 1]], [[1, 0, 0, 1]]])
    assert hnf_triangularize(A) == PM(F2, [[[1, 1]]])


def test_hnf_rank_deficient(F2):
    with pytest.raises(RankDeficient):
        hnf_triangularize(PM(F2, [[[1], []]]))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_hnf_mutual_reduction(q):
    spec = FieldSpec.of_order(q)
    rng = random.Random(q)
    for _ in range(40):
        ell = rng.randint(1, 3)
        mods = [Poly.x_pow_minus(spec, rng.randint(1, 5), rng.randrange(1, q)) for _ in range(ell)]
        gens = [
            [Poly(spec, [rng.randrange(q) for _ in range(m.degree)]) for m in mods]
            for _ in range(rng.randint(0, 3))
        ]
        A = _stacked(spec, gens, mods)
        T = hnf_triangularize(A)
        for i in range(ell):
            assert T[i, i].lead == 1
            for j in range(ell):
                if j < i:
                    assert T[i, j].is_zero()
                if j > i:
                    assert T[i, j].degree < T[j, j].degree
        assert all(reduces_to_zero(r, T) for r in A.entries)
        # conversely, T's rows lie in A's module: adjoining them changes nothing
        assert hnf_triangularize(PolyMatrix(spec, A.entries + T.entries)) == T
        # determinantal divisor agrees with the triangular determinant
        assert minors_gcd(A, ell).degree == sum(d.degree for d in diagonal(T))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_minors_gcd_divides_every_minor(seed):
    rng = random.Random(seed)
    spec = FieldSpec.of_order(rng.choice([2, 3, 5]))
    A = _random_pm(rng, spec, rng.randint(2, 4), rng.randint(1, 3), 2)
    k = rng.randint(1, min(A.rows, A.cols))
    g = minors_gcd(A, k)
    for rs in itertools.combinations(range(A.rows), k):
        for cs in itertools.combinations(range(A.cols), k):
            d = poly_det(A.submatrix(rs, cs))
            assert d.is_zero() or g.divides(d)
