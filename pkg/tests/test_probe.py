import itertools

from mtcodes.algebra import FieldSpec, Poly
from mtcodes.decomp import is_decomposable
from mtcodes.mtcode import MTCode, MTShape, twist_shift
from mtcodes.probe import all_bucket_keys, bucket_key, probe, revalidate

from conftest import all_codewords, dot


def _rel(a, b):
    return "<" if a < b else "=" if a == b else ">"


def brute_bucket(code):
    """Bucket computed from the full codeword sets of C and its dual."""
    spec, shape = code.spec, code.shape
    n = shape.n
    rows = []
    for j in range(code.rho):
        v = code.vector(j)
        for _ in range(n):
            rows.append(v)
            v = twist_shift(v, shape)
    C = all_codewords(spec, rows, n)
    D = {w for w in itertools.product(range(spec.q), repeat=n) if all(dot(spec, w, c) == 0 for c in C)}
    lcd = C & D == {(0,) * n}  # C and its dual share a hull
    k = next(k for k in range(n + 1) if spec.q**k == len(C))
    mmin = min(shape.block_lengths)
    return bucket_key(_rel(k, mmin), lcd, _rel(n - k, mmin), lcd)


def test_bucket_keys():
    keys = all_bucket_keys()
    assert len(keys) == len(set(keys)) == 36


def test_exhaustive_small_shape():
    spec = FieldSpec(2)
    shape = MTShape(spec, (1, 1), (2, 2))
    res = probe(shape, 1, budget=1000)
    assert res.exhaustive and res.examined == res.total == 16
    expected = {}
    for bits in itertools.product(range(2), repeat=4):
        code = MTCode(shape, ((Poly(spec, bits[:2]), Poly(spec, bits[2:])),))
        key = brute_bucket(code)
        cnt, dec = expected.get(key, (0, 0))
        expected[key] = (cnt + 1, dec + is_decomposable(code)[0])
    assert {k: (b.count, b.decomposable) for k, b in res.buckets.items()} == expected
    assert revalidate(res) == []


def test_sampled_is_deterministic():
    shape = MTShape(FieldSpec(3), (1, 2), (3, 3))
    a = probe(shape, 2, budget=50, seed=4)
    b = probe(shape, 2, budget=50, seed=4)
    assert not a.exhaustive and a.examined == 50

    def summary(r):
        return {k: (b.count, b.decomposable, b.witnesses) for k, b in r.buckets.items()}

    assert summary(a) == summary(b)


def test_lambda_square_not_one_has_no_decomposable_non_lcd():
    shape = MTShape(FieldSpec(5), (2, 3), (2, 2))
    res = probe(shape, 1, budget=10**4)
    assert res.exhaustive
    assert res.decomposable_non_lcd == 0


def test_zero_budget():
    res = probe(MTShape(FieldSpec(2), (1,), (3,)), 1, budget=0)
    assert res.examined == 0 and res.buckets == {}


def test_rho_zero():
    res = probe(MTShape(FieldSpec(2), (1,), (3,)), 0, budget=10)
    assert res.exhaustive and res.examined == 1
