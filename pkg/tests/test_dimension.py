import itertools
import random

import pytest

from mtcodes.algebra import Poly
from mtcodes.corpus import CorpusConfig, random_code
from mtcodes.errors import TooManyMinors
from mtcodes.dimension import dim_hnf, dim_minors, dim_rank, dimension_report, stacked_matrix
from mtcodes.mtcode import MTCode


def code(spec, lams, ms, gens=()):
    return MTCode.from_coeffs(spec, lams, ms, gens)


def all_three(c):
    return dim_rank(c), dim_minors(c), dim_hnf(c)


def test_hamming_generator(F2):
    assert all_three(code(F2, [1], [7], [[[1, 1, 0, 1]]])) == (4, 4, 4)


def test_zero_code(F3):
    c = code(F3, [1, 2], [2, 3])
    assert all_three(c) == (0, 0, 0)


def test_full_code(F5):
    c = code(F5, [2, 3], [3, 2], [[[1], []], [[], [1]]])
    assert all_three(c) == (5, 5, 5)


def test_two_block_example(F2):
    # oracle for the rank: test_mtcode expands the five twist shifts by hand
    c = code(F2, [1, 1], [3, 2], [[[1, 1, 1], [1, 1]]])
    assert all_three(c) == (1, 1, 1)


def test_stacked_matrix_shape(F3):
    c = code(F3, [1, 2], [2, 3], [[[1], [2]], [[0, 1], [1]], [[1, 1], []]])
    M = stacked_matrix(c)
    assert (M.rows, M.cols) == (5, 2)
    assert M[3, 0] == Poly.x_pow_minus(F3, 2, 1)
    assert M[4, 1] == Poly.x_pow_minus(F3, 3, 2)
    assert M[3, 1].is_zero() and M[4, 0].is_zero()


def test_minor_cap(F2):
    rng = random.Random(0)
    gens = [[[rng.randrange(2) for _ in range(2)] for _ in range(3)] for _ in range(5)]
    c = code(F2, [1, 1, 1], [2, 2, 2], gens)
    with pytest.raises(TooManyMinors):
        dim_minors(c, max_minors=10)
    rep = dimension_report(c, max_minors=10)
    assert rep.k_minors is None and "minors" in rep.errors
    assert rep.minor_count == 56
    assert rep.k_rank == rep.k_hnf and rep.agree


def _tiny_sweep():
    comps = [list(c) for d in range(3) for c in itertools.product(range(2), repeat=d)]
    for ms in [(1,), (2,), (3,), (1, 2), (2, 2), (2, 3), (3, 3)]:
        ell = len(ms)
        tuples = list(itertools.product(comps, repeat=ell))
        yield ms, []
        for t in tuples:
            yield ms, [list(t)]
        for a, b in itertools.combinations(tuples, 2):
            yield ms, [list(a), list(b)]


def test_exhaustive_tiny_sweep(F2):
    count = 0
    for ms, gens in _tiny_sweep():
        c = code(F2, [1] * len(ms), list(ms), gens)
        k = dim_rank(c)
        assert (dim_minors(c), dim_hnf(c)) == (k, k), (ms, gens)
        count += 1
    assert count > 1000


def test_adding_generator_is_monotone():
    cfg = CorpusConfig()
    rng = random.Random(21)
    for _ in range(60):
        c = random_code(rng, cfg)
        comps = tuple(
            Poly(c.spec, [rng.randrange(c.spec.q) for _ in range(m)]) for m in c.shape.block_lengths
        )
        bigger = c.with_generators(c.generators + (comps,))
        assert dim_hnf(bigger) >= dim_hnf(c)
        assert dim_minors(bigger) >= dim_minors(c)


def test_invariant_under_permutation_and_scaling():
    cfg = CorpusConfig(q_values=(3, 4, 5))
    rng = random.Random(22)
    for _ in range(60):
        c = random_code(rng, cfg)
        if not c.generators:
            continue
        k = all_three(c)
        gens = list(c.generators)
        rng.shuffle(gens)
        a = rng.randrange(1, c.spec.q)
        gens[0] = tuple(f.scale(a) for f in gens[0])
        assert all_three(c.with_generators(tuple(gens))) == k


def test_report_agrees_on_random_codes():
    cfg = CorpusConfig()
    rng = random.Random(23)
    for _ in range(100):
        rep = dimension_report(random_code(rng, cfg))
        assert rep.agree and not rep.errors
        assert rep.k_rank == rep.k_minors == rep.k_hnf
